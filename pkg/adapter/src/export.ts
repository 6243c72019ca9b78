/**
 * Export runners: dataset in, validated wire-format file out.
 */

import { readPairs, uniqueTexts, type PairFormat } from "./dataset.js";
import type { PairScorer, SentenceEncoder } from "./models.js";
import { writeEmbeddingsFile, writeScoresFile, type ScoreRow } from "./wire.js";

export interface ExportConfig {
  dataset: string;
  format: PairFormat;
  output: string;
  batchSize: number;
}

export interface ExportReport {
  records: number;
  dim?: number;
  clamped?: number;
}

function checkBatchSize(batchSize: number): void {
  if (!Number.isInteger(batchSize) || batchSize < 1) {
    throw new Error(`batch size must be an integer >= 1, got ${batchSize}`);
  }
}

function* batches<T>(items: T[], size: number): Generator<T[]> {
  for (let start = 0; start < items.length; start += size) {
    yield items.slice(start, start + size);
  }
}

/** One embedding line per unique text id; constant dimension enforced. */
export async function exportEmbeddings(
  config: ExportConfig,
  encoder: SentenceEncoder,
): Promise<ExportReport> {
  checkBatchSize(config.batchSize);
  const texts = uniqueTexts(readPairs(config.dataset, config.format));
  const ids = [...texts.keys()];

  const vectors = new Map<string, number[]>();
  let dim: number | undefined;
  for (const batch of batches(ids, config.batchSize)) {
    const embedded = await encoder.embed(batch.map((id) => texts.get(id)!));
    if (embedded.length !== batch.length) {
      throw new Error(`encoder returned ${embedded.length} vectors for ${batch.length} texts`);
    }
    for (let i = 0; i < batch.length; i++) {
      const vector = embedded[i];
      dim ??= vector.length;
      if (vector.length !== dim) {
        throw new Error(
          `dimension instability across batches: got ${vector.length}, expected ${dim}`,
        );
      }
      vectors.set(batch[i], vector);
    }
  }

  writeEmbeddingsFile(vectors, config.output);
  return { records: vectors.size, dim };
}

/** One score line per pair, ordered by pair id; out-of-range heads are clamped with a warning. */
export async function exportPairScores(
  config: ExportConfig,
  scorer: PairScorer,
): Promise<ExportReport> {
  checkBatchSize(config.batchSize);
  const pairs = readPairs(config.dataset, config.format);

  const rows: ScoreRow[] = [];
  let clamped = 0;
  for (const batch of batches(pairs, config.batchSize)) {
    const scores = await scorer.scorePairs(batch.map((p) => [p.textA, p.textB]));
    if (scores.length !== batch.length) {
      throw new Error(`scorer returned ${scores.length} scores for ${batch.length} pairs`);
    }
    for (let i = 0; i < batch.length; i++) {
      let score = scores[i];
      if (!Number.isFinite(score)) {
        throw new Error(`non-finite score for pair ${batch[i].pairId}`);
      }
      if (score < 0 || score > 1) {
        clamped += 1;
        score = Math.min(1, Math.max(0, score));
      }
      rows.push({ pairId: batch[i].pairId, score });
    }
  }
  if (clamped > 0) {
    console.warn(`warning: clamped ${clamped} score(s) into [0, 1]; check the scoring head`);
  }

  rows.sort((a, b) => (a.pairId < b.pairId ? -1 : a.pairId > b.pairId ? 1 : 0));
  writeScoresFile(rows, config.output);
  return { records: rows.length, clamped };
}
