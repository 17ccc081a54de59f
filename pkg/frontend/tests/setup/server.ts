// Global test setup: build a bundle from the large fixture corpus with the
// real CLI, serve it with the real HTTP service, and hand the base URL to the
// tests. The UI is exercised end-to-end against the actual backend.

import { execFileSync, spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import { dirname, join, resolve } from "node:path";
import { fileURLToPath } from "node:url";
import type { GlobalSetupContext } from "vitest/node";

const HERE = dirname(fileURLToPath(import.meta.url));
const REPO_ROOT = resolve(HERE, "..", "..", "..");
const FIXTURE = join(REPO_ROOT, "tests", "fixtures", "large");

let child: ChildProcess | null = null;
let workdir: string | null = null;

function freePort(): Promise<number> {
  return new Promise((resolvePort, reject) => {
    const server = createServer();
    server.once("error", reject);
    server.listen(0, "127.0.0.1", () => {
      const address = server.address();
      if (address === null || typeof address === "string") {
        reject(new Error("no port assigned"));
        return;
      }
      server.close(() => resolvePort(address.port));
    });
  });
}

async function waitForServer(base: string): Promise<void> {
  for (let attempt = 0; attempt < 150; attempt += 1) {
    try {
      const response = await fetch(`${base}/api/stats`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error(`backend at ${base} did not come up`);
}

export default async function setup({ provide }: GlobalSetupContext): Promise<() => void> {
  workdir = mkdtempSync(join(tmpdir(), "hypermediator-e2e-"));
  const bundle = join(workdir, "bundle");
  execFileSync("python3", ["-m", "hypermediator.cli", "build", FIXTURE, "-o", bundle], {
    cwd: REPO_ROOT,
    stdio: "pipe",
  });

  const port = await freePort();
  child = spawn(
    "python3",
    ["-m", "hypermediator.cli", "serve", bundle, "--port", String(port)],
    { cwd: REPO_ROOT, stdio: "pipe" },
  );
  const base = `http://127.0.0.1:${port}`;
  await waitForServer(base);
  provide("apiBase", base);

  return () => {
    child?.kill();
    if (workdir) rmSync(workdir, { recursive: true, force: true });
  };
}

declare module "vitest" {
  export interface ProvidedContext {
    apiBase: string;
  }
}
