/**
 * Node bindings for the datacomplexity core.
 *
 * The calculator shells out to the Python CLI (`python -m datacomplexity.cli`)
 * and consumes its JSON report, so every value matches the core bit for bit:
 * features are serialized with shortest round-trip number formatting, which
 * Python parses back to the identical doubles.
 */
import { spawnSync } from 'node:child_process';
import { mkdtempSync, rmSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

export type Label = number | string;

export interface ComplexityReport {
  n_samples: number;
  n_features: number;
  n_classes: number;
  classes: Label[];
  prior_probability: number[];
  score: number;
  complexities: Record<string, number>;
}

export interface CalculatorOptions {
  /** Base seed for the stochastic measures; 0 matches the core default. */
  seed?: number;
  /** Optional subset of canonical measure ids. */
  measures?: string[];
  /** Python interpreter with the datacomplexity package installed. */
  pythonBin?: string;
}

function csvField(value: string): string {
  if (/[",\n\r]/.test(value)) {
    return '"' + value.replace(/"/g, '""') + '"';
  }
  return value;
}

export class ComplexityCalculator {
  private readonly seed: number;
  private readonly measures?: string[];
  private readonly pythonBin: string;
  private fitted?: ComplexityReport;

  constructor(options: CalculatorOptions = {}) {
    this.seed = options.seed ?? 0;
    this.measures = options.measures;
    this.pythonBin =
      options.pythonBin ?? process.env.DATACOMPLEXITY_PYTHON ?? 'python3';
  }

  /** Compute the complexity report for a feature matrix and label vector. */
  fit(features: number[][], labels: Label[]): this {
    if (features.length !== labels.length) {
      throw new Error(`${features.length} feature rows but ${labels.length} labels`);
    }
    if (features.length === 0 || features[0].length === 0) {
      throw new Error('need n >= 2 and m >= 1, got an empty matrix');
    }
    const width = features[0].length;
    features.forEach((row, i) => {
      if (row.length !== width) {
        throw new Error(`row ${i} has ${row.length} values, expected ${width}`);
      }
    });

    const header = [...Array.from({ length: width }, (_, k) => `x${k}`), 'label'];
    const lines = [header.join(',')];
    for (let i = 0; i < features.length; i++) {
      const cells = features[i].map((v) => String(v));
      cells.push(csvField(String(labels[i])));
      lines.push(cells.join(','));
    }

    const dir = mkdtempSync(join(tmpdir(), 'datacomplexity-'));
    try {
      const csvPath = join(dir, 'data.csv');
      writeFileSync(csvPath, lines.join('\n') + '\n', 'utf-8');
      const args = [
        '-m',
        'datacomplexity.cli',
        'analyze',
        csvPath,
        '--label-last',
        '--seed',
        String(this.seed),
        '--json',
        '-',
        '--quiet',
      ];
      if (this.measures) {
        args.push('--measures', this.measures.join(','));
      }
      const run = spawnSync(this.pythonBin, args, {
        encoding: 'utf-8',
        maxBuffer: 64 * 1024 * 1024,
      });
      if (run.error) {
        throw new Error(`cannot run ${this.pythonBin}: ${run.error.message}`);
      }
      if (run.status !== 0) {
        throw new Error(extractDiagnostic(run.stderr, run.status));
      }
      this.fitted = Object.freeze(JSON.parse(run.stdout)) as ComplexityReport;
      return this;
    } finally {
      rmSync(dir, { recursive: true, force: true });
    }
  }

  /** The report mapping, with the same keys as the CLI JSON document. */
  report(): ComplexityReport {
    return this.requireFitted();
  }

  /** Mean of the fitted complexity values. */
  score(): number {
    return this.requireFitted().score;
  }

  /** Fitted measure values in canonical order. */
  get complexity(): number[] {
    return Object.values(this.requireFitted().complexities);
  }

  private requireFitted(): ComplexityReport {
    if (!this.fitted) {
      throw new Error('call fit() first');
    }
    return this.fitted;
  }
}

function extractDiagnostic(stderr: string, status: number | null): string {
  for (const line of stderr.split('\n')) {
    if (line.startsWith('error: ')) {
      return line.slice('error: '.length);
    }
  }
  return `analysis failed with exit code ${status}: ${stderr.trim()}`;
}
