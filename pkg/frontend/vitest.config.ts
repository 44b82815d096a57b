import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    include: ["tests/**/*.test.ts"],
    // the consistency suite boots the Python API once per run
    testTimeout: 30000,
    hookTimeout: 30000,
  },
});
