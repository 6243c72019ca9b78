export { readPairs, uniqueTexts, type LabeledPair, type PairFormat } from "./dataset.js";
export {
  ConstantPairScorer,
  createEncoder,
  createPairScorer,
  StubEncoder,
  StubPairScorer,
  type PairScorer,
  type SentenceEncoder,
} from "./models.js";
export { exportEmbeddings, exportPairScores, type ExportConfig, type ExportReport } from "./export.js";
export {
  formatFloat,
  renderEmbeddings,
  renderScores,
  validateEmbeddingText,
  validateScoreText,
  writeEmbeddingsFile,
  writeScoresFile,
  type ScoreRow,
} from "./wire.js";
