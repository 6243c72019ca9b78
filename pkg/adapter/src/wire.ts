/**
 * Writers for the pairsim wire formats, with producer-side validation.
 *
 * Embeddings: one `id<TAB>v1,v2,...,vn` per line, decimal floats.
 * Scores: one `pair_id<TAB>score` per line, score in [0, 1].
 *
 * Every writer renders the full payload, re-parses it against the grammar
 * and only then touches the filesystem, so format drift is caught here
 * rather than in the consumer.
 */

import { writeFileSync } from "node:fs";

export interface ScoreRow {
  pairId: string;
  score: number;
}

function checkId(id: string, line: number, kind: string): void {
  if (!id) throw new Error(`${kind} line ${line}: empty id`);
  if (/[\t\r\n]/.test(id)) throw new Error(`${kind} line ${line}: id contains tab or newline`);
}

/** Shortest round-trip decimal, the same convention the consumer prints. */
export function formatFloat(value: number): string {
  if (!Number.isFinite(value)) throw new Error(`non-finite component: ${value}`);
  return value.toString();
}

export function renderEmbeddings(vectors: Map<string, number[]>): string {
  const lines: string[] = [];
  let line = 0;
  for (const id of [...vectors.keys()].sort()) {
    line += 1;
    checkId(id, line, "embedding");
    const components = vectors.get(id)!;
    if (components.length < 1) throw new Error(`embedding line ${line}: empty vector`);
    lines.push(`${id}\t${components.map(formatFloat).join(",")}`);
  }
  return lines.map((l) => `${l}\n`).join("");
}

export function renderScores(rows: ScoreRow[]): string {
  const lines: string[] = [];
  rows.forEach((row, index) => {
    checkId(row.pairId, index + 1, "score");
    if (!Number.isFinite(row.score) || row.score < 0 || row.score > 1) {
      throw new Error(`score line ${index + 1}: score out of range [0, 1]: ${row.score}`);
    }
    lines.push(`${row.pairId}\t${formatFloat(row.score)}`);
  });
  return lines.map((l) => `${l}\n`).join("");
}

/** Re-parse rendered embedding text exactly as the consumer's grammar does. */
export function validateEmbeddingText(text: string): void {
  const seen = new Set<string>();
  let dim: number | null = null;
  const lines = text.split("\n");
  lines.forEach((raw, index) => {
    const line = raw.replace(/\r$/, "");
    if (!line.trim() || line.startsWith("#")) return;
    const parts = line.split("\t");
    if (parts.length !== 2 || !parts[0]) {
      throw new Error(`line ${index + 1}: expected id<TAB>v1,v2,...,vn`);
    }
    if (seen.has(parts[0])) throw new Error(`line ${index + 1}: duplicate id ${parts[0]}`);
    seen.add(parts[0]);
    const components = parts[1].split(",").map((cell) => {
      const value = Number(cell);
      if (cell.trim() === "" || Number.isNaN(value)) {
        throw new Error(`line ${index + 1}: unparseable component ${JSON.stringify(cell)}`);
      }
      if (!Number.isFinite(value)) throw new Error(`line ${index + 1}: non-finite component`);
      return value;
    });
    if (dim === null) dim = components.length;
    else if (components.length !== dim) {
      throw new Error(`line ${index + 1}: dimension drift: got ${components.length}, expected ${dim}`);
    }
  });
}

/** Re-parse rendered score text exactly as the consumer's grammar does. */
export function validateScoreText(text: string): void {
  const seen = new Set<string>();
  text.split("\n").forEach((raw, index) => {
    const line = raw.replace(/\r$/, "");
    if (!line.trim() || line.startsWith("#")) return;
    const parts = line.split("\t");
    if (parts.length !== 2 || !parts[0]) {
      throw new Error(`line ${index + 1}: expected pair_id<TAB>score`);
    }
    if (seen.has(parts[0])) throw new Error(`line ${index + 1}: duplicate pair id ${parts[0]}`);
    seen.add(parts[0]);
    const score = Number(parts[1]);
    if (parts[1].trim() === "" || Number.isNaN(score) || score < 0 || score > 1) {
      throw new Error(`line ${index + 1}: score out of range [0, 1]: ${parts[1]}`);
    }
  });
}

export function writeEmbeddingsFile(vectors: Map<string, number[]>, path: string): void {
  const text = renderEmbeddings(vectors);
  validateEmbeddingText(text);
  writeFileSync(path, text, "utf-8");
}

export function writeScoresFile(rows: ScoreRow[], path: string): void {
  const text = renderScores(rows);
  validateScoreText(text);
  writeFileSync(path, text, "utf-8");
}
