// Move composition: the player ticks classical moves from the server's
// legal-move list and announces them as one q-move. The composer enforces
// only the size cap; legality stays entirely server-side.

export class MoveComposer {
  private selected: string[] = [];

  constructor(readonly width: number | "max") {}

  get selection(): readonly string[] {
    return this.selected;
  }

  get limit(): number {
    return this.width === "max" ? Number.POSITIVE_INFINITY : this.width;
  }

  isSelected(move: string): boolean {
    return this.selected.includes(move);
  }

  toggle(move: string): boolean {
    const at = this.selected.indexOf(move);
    if (at >= 0) {
      this.selected.splice(at, 1);
      return false;
    }
    if (this.selected.length >= this.limit) return false;
    this.selected.push(move);
    return true;
  }

  clear(): void {
    this.selected = [];
  }

  canSubmit(): boolean {
    return this.selected.length >= 1 && this.selected.length <= this.limit;
  }

  toQmoveString(): string {
    if (!this.canSubmit()) throw new Error("no moves selected");
    return `[${[...this.selected].sort().join(" & ")}]`;
  }
}
