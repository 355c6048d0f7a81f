// DOM rendering for the console. The whole view re-renders from state;
// the lists involved are small enough that diffing would be noise.

import type { SearchResponse, SearchResult } from "./api.js";
import type { UiState } from "./state.js";

export interface Handlers {
  onQueryInput(value: string): void;
  onTypeSelect(pageType: string): void;
  onSubmit(): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderForm(state: UiState, handlers: Handlers): HTMLElement {
  const form = el("form", "search-form");
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    handlers.onSubmit();
  });

  const input = el("input", "query-input");
  input.type = "text";
  input.placeholder = "search query";
  input.value = state.query;
  input.addEventListener("input", () => handlers.onQueryInput(input.value));

  const button = el("button", "submit-button", "Search");
  button.type = "submit";
  button.disabled = state.query.trim() === "" || state.loading;

  form.append(input, button);
  return form;
}

function renderTypeOptions(state: UiState, handlers: Handlers): HTMLElement {
  const container = el("div", "type-options");
  for (const pageType of state.types) {
    const label = el("label", "type-option");
    const radio = el("input");
    radio.type = "radio";
    radio.name = "page-type";
    radio.value = pageType;
    radio.checked = pageType === state.selectedType;
    radio.addEventListener("change", () => handlers.onTypeSelect(pageType));
    label.append(radio, el("span", undefined, pageType.replace("_", " ")));
    if (radio.checked) label.classList.add("selected");
    container.append(label);
  }
  return container;
}

function renderContributions(result: SearchResult): HTMLElement {
  const list = el("div", "contributions");
  const entries = Object.entries(result.contributions).sort((a, b) => b[1] - a[1]);
  const largest = Math.max(...entries.map(([, value]) => value), 1e-12);
  for (const [attribute, value] of entries) {
    const row = el("div", "contribution");
    row.append(el("span", "attribute-name", attribute));
    const track = el("div", "bar-track");
    const bar = el("div", "bar");
    bar.style.width = `${(value / largest) * 100}%`;
    bar.title = `${attribute}: ${value.toFixed(4)}`;
    track.append(bar);
    row.append(track, el("span", "attribute-value", value.toFixed(3)));
    list.append(row);
  }
  return list;
}

function renderResults(response: SearchResponse): HTMLElement {
  const container = el("div", "results");
  const meta = el(
    "p",
    "results-meta",
    `${response.results.length} of ${response.corpus_size} pages, ` +
      `${response.timing_ms.toFixed(0)} ms`,
  );
  container.append(meta);
  const list = el("ol", "result-list");
  for (const result of response.results) {
    const item = el("li", "result");
    const link = el("a", "result-url", result.url);
    link.href = result.url;
    const score = el("span", "result-score", result.score.toFixed(4));
    item.append(link, score, renderContributions(result));
    list.append(item);
  }
  container.append(list);
  return container;
}

export function render(root: HTMLElement, state: UiState, handlers: Handlers): void {
  const children: HTMLElement[] = [
    el("h1", "title", "flexirank"),
    renderForm(state, handlers),
    renderTypeOptions(state, handlers),
  ];
  if (state.error !== null) {
    children.push(el("div", "error-banner", state.error));
  }
  if (state.results !== null) {
    children.push(renderResults(state.results));
  }
  root.replaceChildren(...children);
}
