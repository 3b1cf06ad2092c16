/** expect: 1 */
function f01(a, b) {
  const c = a + b;
  return c;
}

/** expect: 3 */
function f02(xs) {
  let total = 0;
  for (let i = 0; i < xs.length; i++) {
    if (xs[i] > 0) {
      total += xs[i];
    }
  }
  return total;
}

/** expect: 3 */
function f03(x) {
  if (x < 0) {
    return -1;
  } else if (x === 0) {
    return 0;
  } else {
    return 1;
  }
}

/** expect: 3 */
function f04(n, limit) {
  let i = 0;
  while (i < n && i < limit) {
    i++;
  }
  return i;
}

/** expect: 2 */
function f05(text) {
  try {
    return JSON.parse(text);
  } catch (err) {
    return null;
  } finally {
    console.log("done");
  }
}

/** expect: 2 */
function f06(x) {
  return x > 0 ? x : -x;
}

/** expect: 4 */
function f07(code) {
  switch (code) {
    case 1:
      return "one";
    case 2:
      return "two";
    case 3:
      return "three";
    default:
      return "many";
  }
}

/** expect: 3 */
function f08(a, b, c) {
  return (a ?? b) || c;
}

/** expect: 2 */
function f09(n) {
  let i = 0;
  do {
    i++;
  } while (i < n);
  return i;
}

/** expect: 3 */
function f10(xs) {
  let count = 0;
  for (const x of xs) {
    if (x % 2 === 0) {
      count++;
    }
  }
  return count;
}

/** expect: 2 */
function f11(obj) {
  const keys = [];
  for (const k in obj) {
    keys.push(k);
  }
  return keys;
}

/** expect: 2 */
function f12(xs) {
  return xs.map((v) => (v > 0 ? v : 0));
}

class Counter {
  /** expect: 2 */
  constructor(start) {
    if (start < 0) {
      throw new Error("negative");
    }
    this.value = start;
  }

  /** expect: 2 */
  f13(step) {
    if (step) {
      this.value += step;
    }
    return this.value;
  }

  /** expect: 1 */
  static f18(a) {
    return a?.b?.c;
  }
}

/** expect: 2 */
function* f14(limit) {
  let i = 0;
  while (i < limit) {
    yield i++;
  }
}

/** expect: 2 */
export function f15(a, b) {
  return a && b;
}

/** expect: 2 */
async function f16(url) {
  try {
    return await fetch(url);
  } catch (err) {
    return null;
  }
}

/** expect: 2 */
function f17(xs) {
  /** expect: 2 */
  function inner(v) {
    return v ? v : 0;
  }
  if (xs.length === 0) {
    return [];
  }
  return xs.map(inner);
}

/** expect: 3 */
function f19(x) {
  return x < 0 ? "neg" : x === 0 ? "zero" : "pos";
}

/** expect: 3 */
function f20(xs) {
  let sum = 0;
  for (let i = 0; i < xs.length; i++) {
    if (xs[i] === null) continue;
    sum += xs[i];
  }
  return sum;
}
