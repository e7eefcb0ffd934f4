import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
    // the end-to-end test boots the real Python service
    testTimeout: 60_000,
    hookTimeout: 60_000,
  },
});
