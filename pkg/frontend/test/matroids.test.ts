import { describe, expect, it } from "vitest";

import {
  classIsIndependent,
  groundSize,
  isProperColoring,
  parseMatroidText,
} from "../src/matroids.js";

const K4_TEXT = "graphic 4 6\n0 2\n2 1\n0 3\n3 1\n0 1\n2 3\n";

describe("parseMatroidText", () => {
  it("parses the four families", () => {
    expect(parseMatroidText("uniform 4 2")).toEqual({ family: "uniform", n: 4, r: 2 });
    const k4 = parseMatroidText(K4_TEXT);
    expect(k4.family).toBe("graphic");
    expect(groundSize(k4)).toBe(6);
    const linear = parseMatroidText("linear 2 2 3\n1 0 1\n0 1 1\n");
    expect(groundSize(linear)).toBe(3);
    const partition = parseMatroidText("partition 4 2\n1 0 1\n1 2 3\n");
    expect(groundSize(partition)).toBe(4);
  });

  it("ignores comments and blank lines", () => {
    expect(parseMatroidText("# hi\n\nuniform 2 1 # tail\n")).toEqual({
      family: "uniform",
      n: 2,
      r: 1,
    });
  });

  it("rejects malformed text", () => {
    expect(() => parseMatroidText("")).toThrow(/empty/);
    expect(() => parseMatroidText("octahedron 1")).toThrow(/unknown family/);
    expect(() => parseMatroidText("graphic 3 2\n0 1\n")).toThrow(/edge line/);
    expect(() => parseMatroidText("uniform x 1")).toThrow(/integer/);
  });
});

describe("classIsIndependent", () => {
  const k4 = parseMatroidText(K4_TEXT);

  it("accepts forests and rejects cycles in graphic matroids", () => {
    expect(classIsIndependent(k4, [0, 1, 2])).toBe(true);
    // Edges 1-3, 3-2, 1-2 close a triangle.
    expect(classIsIndependent(k4, [0, 1, 4])).toBe(false);
    expect(classIsIndependent(k4, [])).toBe(true);
  });

  it("applies the uniform rank bound", () => {
    const u42 = parseMatroidText("uniform 4 2");
    expect(classIsIndependent(u42, [0, 3])).toBe(true);
    expect(classIsIndependent(u42, [0, 1, 2])).toBe(false);
  });

  it("applies partition capacities", () => {
    const p = parseMatroidText("partition 4 2\n1 0 1\n1 2 3\n");
    expect(classIsIndependent(p, [0, 2])).toBe(true);
    expect(classIsIndependent(p, [0, 1])).toBe(false);
  });

  it("computes exact rank over prime fields", () => {
    const gf2 = parseMatroidText("linear 2 2 3\n1 0 1\n0 1 1\n");
    expect(classIsIndependent(gf2, [0, 1])).toBe(true);
    expect(classIsIndependent(gf2, [0, 1, 2])).toBe(false);
    const gf7 = parseMatroidText("linear 7 2 3\n1 2 3\n4 5 6\n");
    expect(classIsIndependent(gf7, [0, 1])).toBe(true);
    // Column 2 = 2*col1 - col0 over GF(7).
    expect(classIsIndependent(gf7, [0, 1, 2])).toBe(false);
  });
});

describe("isProperColoring", () => {
  const k4 = parseMatroidText(K4_TEXT);

  it("accepts a two-forest split of K4", () => {
    // {1-3, 3-2, 1-4} is a star at vertex 1; {4-2, 1-2, 3-4} is a path.
    expect(isProperColoring(k4, { "0": 1, "1": 1, "2": 1, "3": 2, "4": 2, "5": 2 })).toBe(true);
  });

  it("rejects a class containing a cycle", () => {
    expect(isProperColoring(k4, { "0": 1, "1": 1, "4": 1 })).toBe(false);
  });
});
