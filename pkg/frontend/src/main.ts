import "./styles.css";
import { App } from "./app";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app container");

const app = new App(root);
void app.start();
