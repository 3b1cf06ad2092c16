/** Runs before the broken region. */
function before(a) {
  return a + 1;
}

function broken(a, b {
  if (a) {
    return b;
  }
}

/** Runs after the broken region. */
function after(c) {
  return c * 2;
}
