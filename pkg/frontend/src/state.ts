import type { SearchResponse } from "./api.js";

export interface UiState {
  query: string;
  selectedType: string;
  types: string[];       // populated from /types at load
  results: SearchResponse | null;
  error: string | null;
  loading: boolean;
}

export const DEFAULT_TYPE = "default";

export function initialState(): UiState {
  return {
    query: "",
    selectedType: DEFAULT_TYPE,
    types: [],
    results: null,
    error: null,
    loading: false,
  };
}
