/** Client-side understanding of the matroid file format.
 *
 * Enough to render the ground set (edges for graphic matroids) and to
 * re-verify that the color classes the server reports are independent.
 */

export type MatroidSpec =
  | { family: "uniform"; n: number; r: number }
  | { family: "graphic"; vertices: number; edges: [number, number][] }
  | { family: "linear"; p: number; rows: number[][] }
  | { family: "partition"; blocks: { cap: number; members: number[] }[] };

function contentLines(text: string): string[][] {
  return text
    .split("\n")
    .map((line) => line.split("#", 1)[0]!.trim())
    .filter((line) => line.length > 0)
    .map((line) => line.split(/\s+/));
}

function toInt(token: string, what: string): number {
  const value = Number(token);
  if (!Number.isInteger(value)) {
    throw new Error(`${what} must be an integer, got "${token}"`);
  }
  return value;
}

export function parseMatroidText(text: string): MatroidSpec {
  const lines = contentLines(text);
  if (lines.length === 0) throw new Error("empty matroid description");
  const header = lines[0]!;
  switch (header[0]) {
    case "uniform": {
      if (header.length !== 3) throw new Error("uniform takes <n> <r>");
      return { family: "uniform", n: toInt(header[1]!, "n"), r: toInt(header[2]!, "r") };
    }
    case "graphic": {
      if (header.length !== 3) throw new Error("graphic takes <vertices> <edges>");
      const vertices = toInt(header[1]!, "vertex count");
      const count = toInt(header[2]!, "edge count");
      const edges: [number, number][] = [];
      for (let i = 1; i <= count; i += 1) {
        const tokens = lines[i];
        if (!tokens || tokens.length !== 2) throw new Error(`edge line ${i} must be "u v"`);
        edges.push([toInt(tokens[0]!, "endpoint"), toInt(tokens[1]!, "endpoint")]);
      }
      return { family: "graphic", vertices, edges };
    }
    case "linear": {
      if (header.length !== 4) throw new Error("linear takes <p> <rows> <cols>");
      const p = toInt(header[1]!, "field order");
      const rowCount = toInt(header[2]!, "row count");
      const cols = toInt(header[3]!, "column count");
      const rows: number[][] = [];
      for (let i = 1; i <= rowCount; i += 1) {
        const tokens = lines[i];
        if (!tokens || tokens.length !== cols) throw new Error(`matrix row ${i} needs ${cols} entries`);
        rows.push(tokens.map((t) => toInt(t, "entry")));
      }
      return { family: "linear", p, rows };
    }
    case "partition": {
      if (header.length !== 3) throw new Error("partition takes <n> <blocks>");
      const blockCount = toInt(header[2]!, "block count");
      const blocks: { cap: number; members: number[] }[] = [];
      for (let i = 1; i <= blockCount; i += 1) {
        const tokens = lines[i];
        if (!tokens || tokens.length === 0) throw new Error(`block line ${i} must be "cap e ..."`);
        blocks.push({
          cap: toInt(tokens[0]!, "capacity"),
          members: tokens.slice(1).map((t) => toInt(t, "element")),
        });
      }
      return { family: "partition", blocks };
    }
    default:
      throw new Error(`unknown family "${header[0]}"`);
  }
}

export function groundSize(spec: MatroidSpec): number {
  switch (spec.family) {
    case "uniform":
      return spec.n;
    case "graphic":
      return spec.edges.length;
    case "linear":
      return spec.rows.length > 0 ? spec.rows[0]!.length : 0;
    case "partition":
      return spec.blocks.reduce((total, block) => total + block.members.length, 0);
  }
}

function graphicIsForest(edges: [number, number][], chosen: number[]): boolean {
  const parent = new Map<number, number>();
  const find = (x: number): number => {
    let root = x;
    while (parent.get(root) !== root) root = parent.get(root)!;
    while (parent.get(x) !== root) {
      const next = parent.get(x)!;
      parent.set(x, root);
      x = next;
    }
    return root;
  };
  for (const index of chosen) {
    const edge = edges[index];
    if (!edge) return false;
    const [u, v] = edge;
    if (!parent.has(u)) parent.set(u, u);
    if (!parent.has(v)) parent.set(v, v);
    const ru = find(u);
    const rv = find(v);
    if (ru === rv) return false;
    parent.set(rv, ru);
  }
  return true;
}

function linearRank(rows: number[][], p: bigint, chosen: number[]): number {
  const matrix = rows.map((row) => chosen.map((c) => BigInt(row[c] ?? 0)));
  const m = matrix.length;
  const n = chosen.length;
  let rank = 0;
  const modinv = (a: bigint): bigint => {
    // Fermat: a^(p-2) mod p for prime p.
    let result = 1n;
    let base = a % p;
    let exp = p - 2n;
    while (exp > 0n) {
      if (exp & 1n) result = (result * base) % p;
      base = (base * base) % p;
      exp >>= 1n;
    }
    return result;
  };
  for (let col = 0; col < n && rank < m; col += 1) {
    let pivot = -1;
    for (let i = rank; i < m; i += 1) {
      if (matrix[i]![col]! % p !== 0n) {
        pivot = i;
        break;
      }
    }
    if (pivot === -1) continue;
    [matrix[rank], matrix[pivot]] = [matrix[pivot]!, matrix[rank]!];
    const inv = modinv(matrix[rank]![col]!);
    matrix[rank] = matrix[rank]!.map((x) => (x * inv) % p);
    for (let i = 0; i < m; i += 1) {
      if (i !== rank && matrix[i]![col]! % p !== 0n) {
        const factor = matrix[i]![col]!;
        matrix[i] = matrix[i]!.map((x, j) => {
          const value = (x - factor * matrix[rank]![j]!) % p;
          return value < 0n ? value + p : value;
        });
      }
    }
    rank += 1;
  }
  return rank;
}

/** Is this set of element ids independent in the matroid? */
export function classIsIndependent(spec: MatroidSpec, elements: number[]): boolean {
  switch (spec.family) {
    case "uniform":
      return elements.length <= spec.r;
    case "graphic":
      return graphicIsForest(spec.edges, elements);
    case "linear":
      return linearRank(spec.rows, BigInt(spec.p), elements) === elements.length;
    case "partition":
      return spec.blocks.every(
        (block) => elements.filter((e) => block.members.includes(e)).length <= block.cap,
      );
  }
}

/** Every color class independent?  Partial colorings are fine. */
export function isProperColoring(
  spec: MatroidSpec,
  coloring: Record<string, number>,
): boolean {
  const classes = new Map<number, number[]>();
  for (const [element, color] of Object.entries(coloring)) {
    const members = classes.get(color) ?? [];
    members.push(Number(element));
    classes.set(color, members);
  }
  return [...classes.values()].every((members) => classIsIndependent(spec, members));
}
