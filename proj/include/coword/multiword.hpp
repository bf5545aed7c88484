#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coword {

using Token = std::string;
using Word = std::vector<Token>;

enum class ErrorKind {
  OutOfRange,
  SamePolarity,
  NotSubboundary,
  BoundaryMismatch,
  InvalidMultiword,
  Parse,
  Typing,
  Grammar,
  Unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

Word concat(const Word& u, const Word& v);
// Least rotation under lexicographic token order.
Word canonical_rotation(const Word& w);
std::string word_to_string(const Word& w, const std::string& sep = " ");

// Endpoints are 1-based; `left` is sorted and duplicate free.
struct Boundary {
  int size = 0;
  std::vector<int> left;

  Boundary() = default;
  Boundary(int n, std::vector<int> l);

  bool is_left(int i) const;
  std::vector<int> right() const;
  auto operator<=>(const Boundary&) const = default;
};

Boundary unit_boundary();
Boundary boundary_tensor(const Boundary& x, const Boundary& y);
Boundary boundary_dual(const Boundary& x);
bool is_subboundary(const Boundary& x, int i, const Boundary& y);
// Points i+1..i+n of x as a boundary of its own.
Boundary sub_boundary(const Boundary& x, int i, int n);
int shift(int k, int s, int i);

struct Edge {
  int source = 0;
  Word label;
  int target = 0;
  auto operator<=>(const Edge&) const = default;
};

struct Multiword {
  Boundary boundary;
  std::vector<Edge> regular;   // sorted by source
  std::vector<Word> singular;  // canonical cyclic words, sorted

  bool is_regular() const { return singular.empty(); }
  auto operator<=>(const Multiword&) const = default;
};

struct ValidationReport {
  bool ok = true;
  enum class Kind { None, OutOfRange, Degree, Polarity } kind = Kind::None;
  int vertex = 0;
  std::string message;
};

ValidationReport validate(const Multiword& m);

// Sorts edges and canonicalizes cycles without checking invariants.
Multiword normalize_raw(Multiword m);
// Normalizes and validates; throws Error(InvalidMultiword) on failure.
Multiword make_multiword(Boundary b, std::vector<Edge> edges, std::vector<Word> cycles = {});

Multiword empty_multiword();
Multiword multiword_tensor(const Multiword& m, const Multiword& n);
Multiword elementary_contraction(const Multiword& m, int n);
Multiword iterated_contraction(const Multiword& m, int i, const Boundary& y);

// Moves consecutive blocks of the given sizes into the order `order`
// (order[k] = index of the block placed k-th).
Multiword permute_blocks(const Multiword& m, const std::vector<int>& sizes,
                         const std::vector<int>& order);

std::size_t total_label_length(const Multiword& m);

std::string boundary_to_string(const Boundary& b);
std::string to_text(const Multiword& m);
Boundary parse_boundary_line(const std::string& line, const std::string& keyword);
// Accepts newline or ';' separated lines.
Multiword parse_multiword(const std::string& text);

}  // namespace coword
