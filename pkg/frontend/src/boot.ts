import { createApp } from "./main.js";

const root = document.getElementById("app");
if (root !== null) {
  createApp(root); // same origin as the service
}
