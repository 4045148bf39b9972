"""System/E2E tests package."""
