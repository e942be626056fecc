#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gekg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries the 1-based line number when one applies.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

/// Bad configuration or arguments, detected before any work starts.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Inputs that are well-formed but unusable (missing probes, empty intersections, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Collector for non-fatal conditions. Functions that can warn take a nullable pointer;
/// with no collector the message goes to the log instead.
using Warnings = std::vector<std::string>;
void warn(Warnings* sink, std::string message);

namespace log {
enum class Level { debug = 0, info = 1, warn = 2, error = 3, off = 4 };
void set_level(Level level);
Level level();
void write(Level level, std::string_view message);
inline void info(std::string_view m) { write(Level::info, m); }
inline void warning(std::string_view m) { write(Level::warn, m); }
}  // namespace log

/// Mixes a global seed with a string key (root id, fold id, ...) into an independent seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view key);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key);

/// Deterministic generator. std:: distributions are implementation-defined, so the
/// sampling helpers are written out here to keep outputs identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);
  double normal();

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  std::string state() const;
  void set_state(const std::string& state);

  bool operator==(const Rng& other) const { return engine_ == other.engine_; }

 private:
  std::mt19937_64 engine_;
};

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::vector<std::string_view> split_ws(std::string_view s);
/// Strict full-string numeric parse; nullopt-like false on failure.
bool parse_double(std::string_view s, double& out);
bool parse_size(std::string_view s, std::size_t& out);
/// Shortest round-trippable decimal form.
std::string format_double(double v);

}  // namespace gekg
