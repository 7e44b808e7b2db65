/** Thin fetch client for the three service endpoints. */

import type {
  ContextsResponse,
  ErrorResponse,
  WhatIfRequest,
  WhatIfResponse,
} from './types.js';

export class ApiError extends Error {
  constructor(
    message: string,
    readonly fieldErrors: ErrorResponse['errors'] = [],
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

async function parseError(response: Response): Promise<never> {
  let detail = `${response.status}`;
  let fields: ErrorResponse['errors'] = [];
  try {
    const body = (await response.json()) as ErrorResponse;
    fields = body.errors ?? [];
    if (fields.length > 0) {
      detail = fields.map((e) => `${e.field}: ${e.reason}`).join('; ');
    }
  } catch {
    // non-JSON error body: keep the status code
  }
  throw new ApiError(`request failed: ${detail}`, fields);
}

export class FrplaneClient {
  constructor(private readonly baseUrl: string = '') {}

  async getContexts(signal?: AbortSignal): Promise<ContextsResponse> {
    const response = await fetch(`${this.baseUrl}/contexts`, { signal });
    if (!response.ok) await parseError(response);
    return (await response.json()) as ContextsResponse;
  }

  async postWhatIf(request: WhatIfRequest, signal?: AbortSignal): Promise<WhatIfResponse> {
    const response = await fetch(`${this.baseUrl}/whatif`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(request),
      signal,
    });
    if (!response.ok) await parseError(response);
    return (await response.json()) as WhatIfResponse;
  }
}
