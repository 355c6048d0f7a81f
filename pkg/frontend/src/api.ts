// HTTP client for the flexirank search service.

export interface SearchResult {
  rank: number;
  url: string;
  score: number;
  contributions: Record<string, number>;
}

export interface SearchResponse {
  results: SearchResult[];
  timing_ms: number;
  corpus_size: number;
}

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

async function errorMessage(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { error?: string };
    if (body.error) return body.error;
  } catch {
    // non-JSON error body; fall through to the generic message
  }
  return `request failed with status ${response.status}`;
}

export async function fetchTypes(base = ""): Promise<string[]> {
  const response = await fetch(`${base}/types`);
  if (!response.ok) throw new ApiError(await errorMessage(response), response.status);
  const body = (await response.json()) as { types: string[] };
  return body.types;
}

export async function search(
  query: string,
  pageType: string,
  k = 10,
  base = "",
): Promise<SearchResponse> {
  const params = new URLSearchParams({ q: query, type: pageType, k: String(k) });
  const response = await fetch(`${base}/search?${params.toString()}`);
  if (!response.ok) throw new ApiError(await errorMessage(response), response.status);
  return (await response.json()) as SearchResponse;
}
