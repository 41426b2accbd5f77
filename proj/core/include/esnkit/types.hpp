#ifndef ESNKIT_TYPES_HPP
#define ESNKIT_TYPES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace esnkit {

// Elements of every finite structure are identified by index; names are
// labels only and never enter any mathematical check.
using Idx = std::int32_t;

// Absent entry of a partial operation table. Undefined products are a
// value, not an error; no sentinel element is ever inserted into a carrier.
inline constexpr Idx undef = -1;

// Row-major table of indices. Used for total multiplication tables
// (no undef entries) and partial composition tables alike.
class IdxTable {
 public:
  IdxTable() = default;
  IdxTable(int rows, int cols, Idx fill = undef)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  Idx operator()(Idx r, Idx c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  Idx& operator()(Idx r, Idx c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  bool defined(Idx r, Idx c) const { return (*this)(r, c) != undef; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool operator==(const IdxTable&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Idx> data_;
};

// Dense boolean matrix; used for partial orders.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(int rows, int cols, bool fill = false)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill ? 1 : 0) {}
  explicit BoolMatrix(int n, bool fill = false) : BoolMatrix(n, n, fill) {}

  bool operator()(Idx r, Idx c) const { return data_[static_cast<size_t>(r) * cols_ + c] != 0; }
  void set(Idx r, Idx c, bool v) { data_[static_cast<size_t>(r) * cols_ + c] = v ? 1 : 0; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool operator==(const BoolMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> data_;
};

// One line of a verification report: a named check, its verdict, and a
// least-witness detail string when it fails (or a short note when it holds).
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckLine> lines;

  void add(std::string name, bool pass, std::string detail = "") {
    lines.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const Report& other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  }
  bool all_pass() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

// Size caps. Every algorithm here is deliberately exhaustive (O(n^3) or
// worse), so generators and conversions refuse inputs beyond desk scale.
// ESNKIT_MAX_ELEMENTS overrides both caps, clamped to a hard ceiling.
int generator_cap();
int conversion_cap();

}  // namespace esnkit

#endif  // ESNKIT_TYPES_HPP
