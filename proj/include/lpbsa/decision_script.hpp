#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lpbsa/core.hpp"

namespace lpbsa {

/// Line-oriented record of every stochastic choice in an engine run.
///
///   INIT B1 4320 3120            initial individual and its integer genome
///   SUBPOP B3 B8 B11 B1 ...      subpopulation draw, by id
///   PAIR B13 K1                  parent and its crossover partner (Kn = rank n
///                                in the current subpopulation, or any id)
///   FORCE C8 X1 1028             override one crossover gene value
///   MUTBIT C1 X1 1               flipped bit (0 = most significant), or '-'
///   THRESH C1 0.42               acceptance threshold for a child
///   ACCEPT C1 / REJECT C7        forced Metropolis verdict
///
/// Blank lines and lines starting with '#' are ignored when parsing.
namespace script {

struct Init {
  std::string id;
  std::vector<std::int64_t> genome;
  bool operator==(const Init&) const = default;
};
struct Subpop {
  std::vector<std::string> ids;
  bool operator==(const Subpop&) const = default;
};
struct Pair {
  std::string parent;
  std::string partner;
  bool operator==(const Pair&) const = default;
};
struct Force {
  std::string child;
  std::size_t gene = 0;  // 0-based, written X1..Xd
  std::int64_t value = 0;
  bool operator==(const Force&) const = default;
};
struct MutBit {
  std::string child;
  std::size_t gene = 0;
  std::optional<std::size_t> bit;  // nullopt: no eligible bit, gene left unchanged
  bool operator==(const MutBit&) const = default;
};
struct Thresh {
  std::string child;
  double value = 0.0;
  bool operator==(const Thresh&) const = default;
};
struct Verdict {
  std::string child;
  bool accept = true;
  bool operator==(const Verdict&) const = default;
};

using Record = std::variant<Init, Subpop, Pair, Force, MutBit, Thresh, Verdict>;

std::string_view keyword(const Record& r);

}  // namespace script

/// Malformed script text.
class ScriptParseError : public InvalidInput {
 public:
  ScriptParseError(std::size_t line, const std::string& what)
      : InvalidInput("script line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The engine's consumption order disagrees with the script.
class ReplayDesync : public std::runtime_error {
 public:
  ReplayDesync(std::size_t record_index, const std::string& what)
      : std::runtime_error("replay desync at record " + std::to_string(record_index + 1) + ": " +
                           what),
        record_index_(record_index) {}
  std::size_t record_index() const { return record_index_; }

 private:
  std::size_t record_index_;
};

struct DecisionScript {
  std::vector<script::Record> records;

  static DecisionScript parse(std::string_view text);
  /// One record per line, '\n' terminated. parse(serialize()) is identity.
  std::string serialize() const;

  bool operator==(const DecisionScript&) const = default;
};

std::string format_record(const script::Record& r);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

/// Sequential reader used by the engine during replay.
class ScriptCursor {
 public:
  explicit ScriptCursor(const DecisionScript& script) : script_(&script) {}

  template <class T>
  bool next_is() const {
    return pos_ < script_->records.size() && std::holds_alternative<T>(script_->records[pos_]);
  }

  /// Consumes a record of type T or throws ReplayDesync.
  template <class T>
  const T& take(std::string_view expectation) {
    if (!next_is<T>()) fail(expectation);
    return std::get<T>(script_->records[pos_++]);
  }

  template <class T>
  const T* take_if() {
    return next_is<T>() ? &std::get<T>(script_->records[pos_++]) : nullptr;
  }

  std::size_t position() const { return pos_; }
  bool at_end() const { return pos_ == script_->records.size(); }

  [[noreturn]] void fail(std::string_view expectation) const;
  /// Like fail(), but blames the record consumed last.
  [[noreturn]] void fail_consumed(std::string_view expectation) const;
  /// Throws ReplayDesync when records remain.
  void expect_end() const;

 private:
  const DecisionScript* script_;
  std::size_t pos_ = 0;
};

}  // namespace lpbsa
