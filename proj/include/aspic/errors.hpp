#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace aspic {

/// Raised on malformed theory text. Positions are 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " (at " + std::to_string(line) + ":" +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A Datalog program has a predicate that depends negatively on itself.
/// The offending cycle is reported head-first, e.g. {a, b, a}.
class not_stratifiable : public std::runtime_error {
 public:
  explicit not_stratifiable(std::vector<std::string> cycle)
      : std::runtime_error(describe(cycle)), cycle_(std::move(cycle)) {}

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  static std::string describe(const std::vector<std::string>& cycle) {
    std::string s = "program is not stratifiable: negation cycle";
    const char* sep = " ";
    for (const auto& p : cycle) {
      s += sep;
      s += p;
      sep = " -> ";
    }
    return s;
  }

  std::vector<std::string> cycle_;
};

/// A configured size cap was exceeded (ground instances, arguments,
/// extension enumeration).
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what_kind, std::size_t limit)
      : std::runtime_error(what_kind + " budget of " + std::to_string(limit) +
                           " exceeded"),
        kind_(what_kind),
        limit_(limit) {}

  const std::string& kind() const noexcept { return kind_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string kind_;
  std::size_t limit_;
};

}  // namespace aspic
