import { test } from "node:test";
import assert from "node:assert/strict";
import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { parseSweepCsv, SWEEP_COLUMNS } from "../src/csv.js";

function fixture(name: string): string {
  return readFileSync(fileURLToPath(new URL(`../../test/fixtures/${name}`, import.meta.url)), "utf-8");
}

const HEADER = SWEEP_COLUMNS.join(",");

test("parses a golden cube sweep and keeps file order", () => {
  const rows = parseSweepCsv(fixture("cube3d_t0_res9.csv"));
  assert.equal(rows.length, 729);
  const first = rows[0]!;
  assert.equal(first.lambda1, -1);
  assert.equal(first.lambda2, -1);
  assert.equal(first.lambda3, -1);
  assert.equal(first.t3, 0);
  assert.equal(first.cp, false);
  assert.equal(first.breaksChshDirect, true);
  assert.equal(first.horodeckiM, 2);
  // canonical order: lambda3 varies fastest
  assert.equal(rows[1]!.lambda3, -0.75);
  assert.equal(rows[1]!.lambda1, -1);
});

test("rejects a header that deviates from the column contract", () => {
  const swapped = HEADER.replace("lambda1,lambda2", "lambda2,lambda1");
  assert.throws(() => parseSweepCsv(`${swapped}\n0,0,0,0,1,1,0,1,0,0.5\n`), /column contract/);
  assert.throws(() => parseSweepCsv("lambda1,lambda2\n0,0\n"), /column contract/);
});

test("rejects rows with the wrong field count", () => {
  assert.throws(() => parseSweepCsv(`${HEADER}\n0,0,0,0,1,1,0,1,0\n`), /expected 10 fields, got 9/);
});

test("rejects non-binary boolean fields", () => {
  assert.throws(() => parseSweepCsv(`${HEADER}\n0,0,0,0,2,1,0,1,0,0.5\n`), /cp must be 0 or 1/);
});

test("rejects non-numeric reals", () => {
  assert.throws(() => parseSweepCsv(`${HEADER}\n0,0,abc,0,1,1,0,1,0,0.5\n`), /lambda3 is not a number/);
});

test("rejects empty input and header-only input", () => {
  assert.throws(() => parseSweepCsv(""), /column contract/);
  assert.throws(() => parseSweepCsv(`${HEADER}\n`), /no data rows/);
});

test("reals round-trip at full precision", () => {
  const rows = parseSweepCsv(`${HEADER}\n0.70710678118654746,0,0,0,1,0,0,0,0,1.0000000000000002\n`);
  assert.equal(rows[0]!.lambda1, 0.70710678118654746);
  assert.equal(rows[0]!.horodeckiM, 1.0000000000000002);
});
