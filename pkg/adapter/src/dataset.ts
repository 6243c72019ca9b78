/**
 * Labeled-pair dataset reader, mirroring the consumer's formats and its
 * text-id derivation: question ids for `qqp-tsv`, `<pair_id>:a` /
 * `<pair_id>:b` for `generic-csv`.  Unusable rows are skipped, never fatal.
 */

import { readFileSync } from "node:fs";
import Papa from "papaparse";

export type PairFormat = "qqp-tsv" | "generic-csv";

export interface LabeledPair {
  pairId: string;
  textA: string;
  textB: string;
  label: 0 | 1;
  idA: string;
  idB: string;
}

const QQP_HEADER = ["id", "qid1", "qid2", "question1", "question2", "is_duplicate"];
const GENERIC_HEADER = ["pair_id", "text_a", "text_b", "label"];

function parseRows(path: string, delimiter: string): string[][] {
  const text = readFileSync(path, "utf-8");
  const parsed = Papa.parse<string[]>(text, { delimiter, skipEmptyLines: true });
  return parsed.data;
}

function headerMatches(row: string[] | undefined, expected: string[]): boolean {
  if (!row || row.length !== expected.length) return false;
  return row.every((cell, i) => cell.trim() === expected[i]);
}

export function readPairs(path: string, format: PairFormat): LabeledPair[] {
  const expected = format === "qqp-tsv" ? QQP_HEADER : GENERIC_HEADER;
  const rows = parseRows(path, format === "qqp-tsv" ? "\t" : ",");
  if (!headerMatches(rows[0], expected)) {
    throw new Error(`${path}: header mismatch, expected ${expected.join(",")}`);
  }

  const pairs: LabeledPair[] = [];
  for (const row of rows.slice(1)) {
    let pairId: string, textA: string, textB: string, rawLabel: string, idA: string, idB: string;
    if (format === "qqp-tsv") {
      if (row.length !== 6) continue;
      [pairId, idA, idB, textA, textB, rawLabel] = row.map((cell) => cell.trim());
    } else {
      if (row.length !== 4) continue;
      [pairId, textA, textB, rawLabel] = row.map((cell) => cell.trim());
      idA = `${pairId}:a`;
      idB = `${pairId}:b`;
    }
    if (!pairId || !textA || !textB || (rawLabel !== "0" && rawLabel !== "1")) continue;
    pairs.push({ pairId, textA, textB, label: rawLabel === "1" ? 1 : 0, idA, idB });
  }
  return pairs;
}

/** id -> text for every distinct text id; first occurrence wins. */
export function uniqueTexts(pairs: LabeledPair[]): Map<string, string> {
  const texts = new Map<string, string>();
  for (const pair of pairs) {
    if (!texts.has(pair.idA)) texts.set(pair.idA, pair.textA);
    if (!texts.has(pair.idB)) texts.set(pair.idB, pair.textB);
  }
  return texts;
}
