// Controller: owns the state, talks to the service, re-renders on change.

import { fetchTypes, search } from "./api.js";
import { render } from "./render.js";
import { DEFAULT_TYPE, initialState, type UiState } from "./state.js";

export interface ServiceClient {
  fetchTypes(): Promise<string[]>;
  search(query: string, pageType: string, k?: number): Promise<import("./api.js").SearchResponse>;
}

const liveClient: ServiceClient = {
  fetchTypes: () => fetchTypes(),
  search: (query, pageType, k) => search(query, pageType, k),
};

export class SearchConsole {
  readonly state: UiState = initialState();
  private requestCounter = 0;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: ServiceClient = liveClient,
    private readonly pageSize = 10,
  ) {}

  async init(): Promise<void> {
    try {
      const types = await this.client.fetchTypes();
      this.state.types = types;
      if (!types.includes(this.state.selectedType)) {
        this.state.selectedType = types[types.length - 1] ?? DEFAULT_TYPE;
      }
    } catch (error) {
      this.state.error = `could not load page types: ${message(error)}`;
    }
    this.render();
  }

  setQuery(value: string): void {
    this.state.query = value;
    this.render();
  }

  async selectType(pageType: string): Promise<void> {
    if (!this.state.types.includes(pageType) || pageType === this.state.selectedType) {
      return;
    }
    this.state.selectedType = pageType;
    // switching the option re-issues the current query
    if (this.state.query.trim() !== "") {
      await this.submit();
    } else {
      this.render();
    }
  }

  async submit(): Promise<void> {
    const query = this.state.query.trim();
    if (query === "") {
      return; // button is disabled; ignore programmatic calls too
    }
    const ticket = ++this.requestCounter;
    this.state.loading = true;
    this.render();
    try {
      const response = await this.client.search(query, this.state.selectedType, this.pageSize);
      if (ticket !== this.requestCounter) {
        return; // a newer submit superseded this response
      }
      this.state.results = response; // replaced atomically, never merged
      this.state.error = null;
    } catch (error) {
      if (ticket !== this.requestCounter) {
        return;
      }
      this.state.error = message(error); // stale results stay visible
    } finally {
      if (ticket === this.requestCounter) {
        this.state.loading = false;
        this.render();
      }
    }
  }

  private render(): void {
    render(this.root, this.state, {
      onQueryInput: (value) => this.setQuery(value),
      onTypeSelect: (pageType) => void this.selectType(pageType),
      onSubmit: () => void this.submit(),
    });
  }
}

function message(error: unknown): string {
  return error instanceof Error ? error.message : String(error);
}
