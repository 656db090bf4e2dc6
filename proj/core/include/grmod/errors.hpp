#pragma once

#include <stdexcept>
#include <string>

namespace grmod {

/* Parse errors carry the 1-based line and 0-based column of the offending
 * token. line == 0 means "not file based" (bare string parsing). */
class parse_error : public std::runtime_error {
  public:
    parse_error(std::string msg, std::size_t line, std::size_t column)
        : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    static std::string format(const std::string& msg, std::size_t line, std::size_t column) {
        if (line == 0)
            return msg + " (at position " + std::to_string(column) + ")";
        return msg + " (line " + std::to_string(line) + ", position " + std::to_string(column) + ")";
    }

    std::size_t line_;
    std::size_t column_;
};

/* A caller violated a documented precondition (mismatched rings, nonzero
 * composition where a complex was promised, ...). */
class contract_error : public std::logic_error {
  public:
    explicit contract_error(const std::string& msg) : std::logic_error(msg) {}
};

/* Sampling of a certified generic linear system ran out of retries. */
class sampling_error : public std::runtime_error {
  public:
    sampling_error(const std::string& msg, int failing_prefix)
        : std::runtime_error(msg), failing_prefix_(failing_prefix) {}

    int failing_prefix() const noexcept { return failing_prefix_; }

  private:
    int failing_prefix_;
};

/* A theorem's hypotheses were met but its conclusion failed on a concrete
 * instance. Since every verified statement is proved, this always means an
 * implementation bug; it must never be swallowed. */
class falsification_error : public std::logic_error {
  public:
    explicit falsification_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace grmod
