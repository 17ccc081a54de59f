import { defineConfig } from "vitest/config";

export default defineConfig({
  base: "/",
  build: { outDir: "dist", emptyOutDir: true },
  server: {
    // dev-mode proxy to a locally running `hypermediator serve`
    proxy: { "/api": "http://127.0.0.1:8000" },
  },
  test: {
    environment: "jsdom",
    globalSetup: "./tests/setup/server.ts",
    testTimeout: 30000,
    hookTimeout: 120000,
  },
});
