#pragma once

// Data-parallel grid kernels. `serial` is the reference implementation kept
// for testing; `omp` distributes the same per-index work over OpenMP threads.
// Both write result i from work(i) only, so their outputs are identical.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <vector>

namespace fbelos::kernels {

enum class Policy { Serial, Parallel };

/// n uniform points from a to b, both included (n >= 2).
std::vector<double> uniform_grid(double a, double b, std::size_t n);

/// Points a + (b - a) * i / (n + 1) for i = 1..n.
std::vector<double> interior_grid(double a, double b, std::size_t n);

struct Extremum {
  double value = -INFINITY;
  std::size_t index = 0;
};

namespace serial {

template <class Out, class Work>
std::vector<Out> map_indexed(std::size_t n, const Work& work) {
  std::vector<Out> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = work(i);
  return out;
}

/// Largest value and its first index; NaN entries are ignored.
inline Extremum max_element(const std::vector<double>& values) {
  Extremum best;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > best.value) best = {values[i], i};
  }
  return best;
}

}  // namespace serial

namespace omp {

/// Exceptions thrown by work(i) are captured; the one from the lowest index
/// is rethrown after the loop.
template <class Out, class Work>
std::vector<Out> map_indexed(std::size_t n, const Work& work) {
  std::vector<Out> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = work(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline Extremum max_element(const std::vector<double>& values) {
  const auto count = static_cast<long long>(values.size());
  double best = -INFINITY;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (long long i = 0; i < count; ++i) {
    if (values[static_cast<std::size_t>(i)] > best) best = values[static_cast<std::size_t>(i)];
  }
  Extremum out{best, 0};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == best) {
      out.index = i;
      break;
    }
  }
  return out;
}

}  // namespace omp

template <class Out, class Work>
std::vector<Out> map_indexed(std::size_t n, const Work& work, Policy policy = Policy::Parallel) {
  return policy == Policy::Serial ? serial::map_indexed<Out>(n, work)
                                  : omp::map_indexed<Out>(n, work);
}

inline Extremum max_element(const std::vector<double>& values, Policy policy = Policy::Parallel) {
  return policy == Policy::Serial ? serial::max_element(values) : omp::max_element(values);
}

/// max_i |values[i]|.
inline double max_abs(const std::vector<double>& values, Policy policy = Policy::Parallel) {
  std::vector<double> mags(values.size());
  std::transform(values.begin(), values.end(), mags.begin(), [](double v) { return std::fabs(v); });
  const Extremum e = max_element(mags, policy);
  return values.empty() ? 0.0 : e.value;
}

}  // namespace fbelos::kernels
