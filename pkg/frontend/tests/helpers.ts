import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { SearchResponse } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

function loadJson<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as T;
}

// Captured responses of the real service on the shipped fixture corpus.
export const INDEX_RESPONSE = loadJson<SearchResponse>("search-index.json");
export const ARTICLE_RESPONSE = loadJson<SearchResponse>("search-article.json");
export const TYPES = loadJson<{ types: string[] }>("types.json").types;

export function mount(): HTMLElement {
  const root = document.createElement("div");
  document.body.replaceChildren(root);
  return root;
}

export function resultUrls(root: HTMLElement): string[] {
  return [...root.querySelectorAll<HTMLAnchorElement>(".result-url")].map(
    (a) => a.textContent ?? "",
  );
}

export function selectedType(root: HTMLElement): string | null {
  const radio = root.querySelector<HTMLInputElement>(
    '.type-option input[type="radio"]:checked',
  );
  return radio?.value ?? null;
}
