#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ncs {

// Rho structure of one iterated endomorphism run. When the start is already
// on the cycle (tail == 0) there is no colliding pair; otherwise a is the
// tail predecessor and b the cycle predecessor of the entry point, with
// f(a) == f(b) and a != b.
struct IterationOutcome {
  std::uint64_t tail = 0;
  std::uint64_t cycle = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> colliding_pair;
  std::uint64_t evaluations = 0;  // exact number of calls made to f
};

namespace detail {

// Given the exact cycle length, locate the entry point and the two
// predecessors by a lockstep walk from x0 and from x0 advanced by the cycle
// length. O(1) memory. f must already account its own evaluations.
template <class F>
void recover_pair(F&& f, std::uint64_t x0, IterationOutcome& out) {
  std::uint64_t y = x0;
  for (std::uint64_t i = 0; i < out.cycle; ++i) y = f(y);
  if (y == x0) {
    out.tail = 0;
    return;
  }
  std::uint64_t x = x0;
  std::uint64_t tail = 0;
  std::uint64_t px = x, py = y;
  do {
    px = x;
    py = y;
    x = f(x);
    y = f(y);
    ++tail;
  } while (x != y);
  out.tail = tail;
  out.colliding_pair = {px, py};
}

}  // namespace detail

template <class F>
IterationOutcome floyd(F&& f, std::uint64_t x0) {
  IterationOutcome out;
  auto step = [&](std::uint64_t s) {
    ++out.evaluations;
    return f(s);
  };
  std::uint64_t tortoise = step(x0);
  std::uint64_t hare = step(tortoise);
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(step(hare));
  }
  // cycle length from the meeting point
  std::uint64_t cycle = 1;
  for (std::uint64_t x = step(tortoise); x != tortoise; x = step(x)) ++cycle;
  out.cycle = cycle;
  detail::recover_pair(step, x0, out);
  return out;
}

template <class F>
IterationOutcome brent(F&& f, std::uint64_t x0) {
  IterationOutcome out;
  auto step = [&](std::uint64_t s) {
    ++out.evaluations;
    return f(s);
  };
  std::uint64_t power = 1, cycle = 1;
  std::uint64_t tortoise = x0;
  std::uint64_t hare = step(x0);
  while (tortoise != hare) {
    if (power == cycle) {
      tortoise = hare;
      power <<= 1;
      cycle = 0;
    }
    hare = step(hare);
    ++cycle;
  }
  out.cycle = cycle;
  detail::recover_pair(step, x0, out);
  return out;
}

template <class F>
IterationOutcome nivasch(F&& f, std::uint64_t x0) {
  IterationOutcome out;
  auto step = [&](std::uint64_t s) {
    ++out.evaluations;
    return f(s);
  };
  // stack of strictly increasing values; the cycle minimum is the first
  // value seen twice under this discipline
  std::vector<std::pair<std::uint64_t, std::uint64_t>> stack;  // (value, time)
  std::uint64_t x = x0, t = 0;
  for (;;) {
    while (!stack.empty() && stack.back().first > x) stack.pop_back();
    if (!stack.empty() && stack.back().first == x) {
      out.cycle = t - stack.back().second;
      break;
    }
    stack.emplace_back(x, t);
    x = step(x);
    ++t;
  }
  detail::recover_pair(step, x0, out);
  return out;
}

}  // namespace ncs
