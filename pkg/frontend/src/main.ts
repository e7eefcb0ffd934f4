// Browser bootstrap. The API origin defaults to same-origin and can be
// overridden by setting window.GLUCOLOG_API before this script loads.

import { createApp } from "./app.js";
import { ClientSession } from "./session.js";

declare global {
  interface Window {
    GLUCOLOG_API?: string;
  }
}

const baseUrl = window.GLUCOLOG_API ?? "";
const session = new ClientSession(baseUrl);
const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");

const app = createApp(root, session);
window.addEventListener("hashchange", () => void app.render());
void app.render();
