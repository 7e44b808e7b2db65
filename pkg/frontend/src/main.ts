/**
 * Page wiring: controls -> scheduler -> service -> view model -> SVG.
 *
 * Kept deliberately thin; everything with behavior worth testing lives
 * in the pure modules (state, scheduler, viewmodel, plane).
 */

import { ApiError, FrplaneClient } from './api.js';
import { FIXTURES, loadFixture } from './fixtures.js';
import { renderPlaneSVG } from './plane.js';
import { RequestScheduler } from './scheduler.js';
import { ControlState, INITIAL_STATE, toWhatIfRequest } from './state.js';
import type { WhatIfRequest, WhatIfResponse } from './types.js';
import { bannerFor, buildViewModel } from './viewmodel.js';

const client = new FrplaneClient('');
const state: ControlState = { ...INITIAL_STATE, privacyLevels: [...INITIAL_STATE.privacyLevels] };

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setConnectivity(down: boolean, message = ''): void {
  const banner = el<HTMLDivElement>('connectivity');
  banner.hidden = !down;
  banner.textContent = down ? `Service unreachable: ${message}` : '';
  for (const input of document.querySelectorAll<HTMLInputElement>('input, select, button')) {
    input.disabled = down;
  }
}

function present(response: WhatIfResponse): void {
  setConnectivity(false);
  const vm = buildViewModel(response);
  el<HTMLDivElement>('plane').innerHTML = renderPlaneSVG(vm);
  const banner = el<HTMLDivElement>('state-banner');
  const text = bannerFor(vm);
  banner.hidden = text === null;
  banner.textContent = text ?? '';
  el<HTMLSpanElement>('verdict').textContent = vm.overall;
  el<HTMLSpanElement>('verdict').className = `verdict ${vm.overall}`;
  el<HTMLSpanElement>('ladder').textContent = `${vm.ladderLevel} — ${vm.ladderRationale}`;
}

const scheduler = new RequestScheduler<WhatIfRequest, WhatIfResponse>(
  (request, signal) => client.postWhatIf(request, signal),
  {
    onResult: present,
    onError: (error) => {
      if (error instanceof DOMException && error.name === 'AbortError') return;
      if (error instanceof ApiError) {
        const banner = el<HTMLDivElement>('state-banner');
        banner.hidden = false;
        banner.textContent = error.message;
        return;
      }
      setConnectivity(true, error instanceof Error ? error.message : String(error));
    },
  },
);

function syncControls(): void {
  el<HTMLInputElement>('w').value = String(state.w);
  el<HTMLInputElement>('r').value = String(state.r);
  el<HTMLInputElement>('t').value = String(state.t);
  el<HTMLOutputElement>('w-out').value = state.w.toFixed(2);
  el<HTMLOutputElement>('r-out').value = state.r.toFixed(2);
  el<HTMLOutputElement>('t-out').value = state.t.toFixed(2);
  el<HTMLSelectElement>('context').value = String(state.context);
  el<HTMLSelectElement>('harm').value = String(state.harmClass);
  for (const level of [1, 2, 3]) {
    el<HTMLInputElement>(`p${level}`).checked = state.privacyLevels.includes(level);
  }
}

function onChange(): void {
  scheduler.request(toWhatIfRequest(state));
}

function bindControls(): void {
  for (const key of ['w', 'r', 't'] as const) {
    el<HTMLInputElement>(key).addEventListener('input', (event) => {
      state[key] = Number((event.target as HTMLInputElement).value);
      el<HTMLOutputElement>(`${key}-out`).value = state[key].toFixed(2);
      onChange();
    });
  }
  el<HTMLSelectElement>('context').addEventListener('change', (event) => {
    state.context = (event.target as HTMLSelectElement).value;
    onChange();
  });
  el<HTMLSelectElement>('harm').addEventListener('change', (event) => {
    const value = (event.target as HTMLSelectElement).value;
    state.harmClass = value === '2' || value === '3' ? (Number(value) as 2 | 3) : (value as never);
    onChange();
  });
  for (const level of [1, 2, 3]) {
    el<HTMLInputElement>(`p${level}`).addEventListener('change', (event) => {
      const checked = (event.target as HTMLInputElement).checked;
      const set = new Set(state.privacyLevels);
      if (checked) set.add(level);
      else set.delete(level);
      if (set.size === 0) {
        set.add(level); // at least one privacy row stays selected
        (event.target as HTMLInputElement).checked = true;
      }
      state.privacyLevels = [...set].sort();
      onChange();
    });
  }
  const picker = el<HTMLSelectElement>('fixture');
  for (const fixture of FIXTURES) {
    const option = document.createElement('option');
    option.value = fixture.name;
    option.textContent = `${fixture.name} — ${fixture.title}`;
    picker.appendChild(option);
  }
  picker.addEventListener('change', (event) => {
    const fixture = loadFixture((event.target as HTMLSelectElement).value);
    if (!fixture) return;
    Object.assign(state, fixture.state, { privacyLevels: [...fixture.state.privacyLevels] });
    syncControls();
    scheduler.fire(toWhatIfRequest(state));
  });
}

async function boot(): Promise<void> {
  bindControls();
  syncControls();
  try {
    const presets = await client.getContexts();
    const picker = el<HTMLSelectElement>('context');
    picker.innerHTML = '';
    for (const preset of presets.contexts) {
      const option = document.createElement('option');
      option.value = preset.name;
      option.textContent = `${preset.name} (H/W = ${preset.hw_ratio.toFixed(4)})`;
      picker.appendChild(option);
    }
    picker.value = String(state.context);
  } catch (error) {
    setConnectivity(true, error instanceof Error ? error.message : String(error));
    return;
  }
  scheduler.fire(toWhatIfRequest(state));
}

void boot();
