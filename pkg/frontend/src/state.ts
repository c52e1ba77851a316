/** View state shared by all panels, plus latest-wins fetch sequencing. */

export interface HoverTarget {
  step: number;
  label: string;
}

export interface ViewState {
  circuitId: string | null;
  /** Brushed state-index range [from, to], inclusive; null = full range. */
  brush: [number, number] | null;
  hovered: HoverTarget | null;
  /** Gate step selected for the explanation + dandelion pair. */
  selectedStep: number | null;
  /** Dandelion scale factor in (0, 1]. */
  k: number;
}

export const DEFAULT_K = 0.25;

export function initialViewState(): ViewState {
  return { circuitId: null, brush: null, hovered: null, selectedStep: null, k: DEFAULT_K };
}

export function clampBrush(
  range: [number, number],
  stepCount: number,
): [number, number] {
  const lo = Math.max(0, Math.min(range[0], range[1]));
  const hi = Math.min(stepCount, Math.max(range[0], range[1]));
  return [Math.round(lo), Math.round(hi)];
}

export function clampK(k: number): number {
  if (!Number.isFinite(k)) return DEFAULT_K;
  return Math.min(1, Math.max(0.01, k));
}

type Listener = (state: ViewState) => void;

export class Store {
  private state = initialViewState();
  private listeners: Listener[] = [];

  get(): ViewState {
    return this.state;
  }

  update(partial: Partial<ViewState>): void {
    this.state = { ...this.state, ...partial };
    for (const listener of this.listeners) listener(this.state);
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }
}

/** Tags each request with a sequence number; resolutions belonging to an
 * outdated request are dropped so slow responses can never clobber new ones. */
export class LatestWins {
  private seq = 0;

  run<T>(task: () => Promise<T>, apply: (value: T) => void): Promise<void> {
    const ticket = ++this.seq;
    return task().then((value) => {
      if (ticket === this.seq) apply(value);
    });
  }

  get current(): number {
    return this.seq;
  }
}
