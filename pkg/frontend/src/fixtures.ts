/**
 * Control presets mirroring the service's three bundled cases
 * (met-lfr-trials, london-terror-escapee, brondby-stadium). Loading one
 * only populates the controls; the verdict still comes from the server.
 */

import type { ControlState } from './state.js';

export interface Fixture {
  name: string;
  title: string;
  state: ControlState;
}

export const FIXTURES: readonly Fixture[] = [
  {
    name: 'met',
    title: 'Street trials (public space, harm level unrecorded)',
    state: {
      w: 0.3,
      r: 0.85,
      t: 0.0,
      context: 'tolerant',
      privacyLevels: [1],
      harmClass: 'unknown',
    },
  },
  {
    name: 'london',
    title: 'Escaped terror suspect (city-wide search)',
    state: {
      w: 0.75,
      r: 0.9,
      t: 0.0,
      context: 'moderate',
      privacyLevels: [1, 2, 3],
      harmClass: 3,
    },
  },
  {
    name: 'brondby',
    title: 'Stadium banned-fan screening (material harm only)',
    state: {
      w: 0.3,
      r: 0.95,
      t: 0.0,
      context: 'moderate',
      privacyLevels: [2],
      harmClass: 'material-only',
    },
  },
];

export function loadFixture(name: string): Fixture | null {
  return FIXTURES.find((f) => f.name === name) ?? null;
}
