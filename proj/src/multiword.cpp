#include "coword/multiword.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coword {

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word canonical_rotation(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  Word cur = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

std::string word_to_string(const Word& w, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += w[i];
  }
  return out;
}

Boundary::Boundary(int n, std::vector<int> l) : size(n), left(std::move(l)) {
  std::sort(left.begin(), left.end());
  left.erase(std::unique(left.begin(), left.end()), left.end());
  for (int i : left) {
    if (i < 1 || i > size) {
      throw Error(ErrorKind::OutOfRange, "left endpoint " + std::to_string(i) + " outside 1.." +
                                             std::to_string(size));
    }
  }
}

bool Boundary::is_left(int i) const { return std::binary_search(left.begin(), left.end(), i); }

std::vector<int> Boundary::right() const {
  std::vector<int> r;
  for (int i = 1; i <= size; ++i)
    if (!is_left(i)) r.push_back(i);
  return r;
}

Boundary unit_boundary() { return Boundary{}; }

Boundary boundary_tensor(const Boundary& x, const Boundary& y) {
  Boundary out;
  out.size = x.size + y.size;
  out.left = x.left;
  for (int i : y.left) out.left.push_back(x.size + i);
  return out;
}

Boundary boundary_dual(const Boundary& x) {
  Boundary out;
  out.size = x.size;
  for (int i : x.right()) out.left.push_back(x.size + 1 - i);
  std::sort(out.left.begin(), out.left.end());
  return out;
}

bool is_subboundary(const Boundary& x, int i, const Boundary& y) {
  if (i < 0 || i + y.size > x.size) return false;
  for (int k = 1; k <= y.size; ++k)
    if (y.is_left(k) != x.is_left(i + k)) return false;
  return true;
}

Boundary sub_boundary(const Boundary& x, int i, int n) {
  if (i < 0 || n < 0 || i + n > x.size)
    throw Error(ErrorKind::OutOfRange, "sub-boundary outside host boundary");
  Boundary out;
  out.size = n;
  for (int k = 1; k <= n; ++k)
    if (x.is_left(i + k)) out.left.push_back(k);
  return out;
}

int shift(int k, int s, int i) { return i < k ? i : i + s; }

ValidationReport validate(const Multiword& m) {
  ValidationReport rep;
  const Boundary& b = m.boundary;
  std::vector<int> degree(b.size + 1, 0);
  auto fail = [&](ValidationReport::Kind kind, int v, std::string msg) {
    rep.ok = false;
    rep.kind = kind;
    rep.vertex = v;
    rep.message = std::move(msg);
    return rep;
  };
  for (const Edge& e : m.regular) {
    for (int v : {e.source, e.target}) {
      if (v < 1 || v > b.size)
        return fail(ValidationReport::Kind::OutOfRange, v,
                    "vertex " + std::to_string(v) + " outside boundary");
      if (++degree[v] > 1)
        return fail(ValidationReport::Kind::Degree, v,
                    "vertex " + std::to_string(v) + " has degree 2");
    }
    if (!b.is_left(e.source))
      return fail(ValidationReport::Kind::Polarity, e.source,
                  "edge source " + std::to_string(e.source) + " is a right endpoint");
    if (b.is_left(e.target))
      return fail(ValidationReport::Kind::Polarity, e.target,
                  "edge target " + std::to_string(e.target) + " is a left endpoint");
  }
  for (int v = 1; v <= b.size; ++v)
    if (degree[v] == 0)
      return fail(ValidationReport::Kind::Degree, v, "vertex " + std::to_string(v) + " is unmatched");
  return rep;
}

Multiword normalize_raw(Multiword m) {
  std::sort(m.regular.begin(), m.regular.end());
  for (Word& w : m.singular) w = canonical_rotation(w);
  std::sort(m.singular.begin(), m.singular.end());
  return m;
}

Multiword make_multiword(Boundary b, std::vector<Edge> edges, std::vector<Word> cycles) {
  Multiword m{std::move(b), std::move(edges), std::move(cycles)};
  m = normalize_raw(std::move(m));
  ValidationReport rep = validate(m);
  if (!rep.ok) throw Error(ErrorKind::InvalidMultiword, rep.message);
  return m;
}

Multiword empty_multiword() { return Multiword{}; }

Multiword multiword_tensor(const Multiword& m, const Multiword& n) {
  Multiword out;
  out.boundary = boundary_tensor(m.boundary, n.boundary);
  out.regular = m.regular;
  const int off = m.boundary.size;
  for (const Edge& e : n.regular) out.regular.push_back(Edge{e.source + off, e.label, e.target + off});
  out.singular = m.singular;
  out.singular.insert(out.singular.end(), n.singular.begin(), n.singular.end());
  std::sort(out.singular.begin(), out.singular.end());
  return out;
}

Multiword elementary_contraction(const Multiword& m, int n) {
  const Boundary& b = m.boundary;
  if (n < 1 || n >= b.size)
    throw Error(ErrorKind::OutOfRange, "contraction index " + std::to_string(n) +
                                           " out of range for boundary of size " +
                                           std::to_string(b.size));
  const bool left_n = b.is_left(n);
  if (left_n == b.is_left(n + 1))
    throw Error(ErrorKind::SamePolarity, "positions " + std::to_string(n) + " and " +
                                             std::to_string(n + 1) + " have the same polarity");
  const int x = left_n ? n + 1 : n;  // right endpoint of the pair
  const int y = left_n ? n : n + 1;  // left endpoint of the pair

  auto back = [n](int i) { return i < n ? i : i - 2; };

  Multiword out;
  out.boundary.size = b.size - 2;
  for (int i : b.left)
    if (i != n && i != n + 1) out.boundary.left.push_back(back(i));
  out.singular = m.singular;

  const Edge* into_x = nullptr;
  const Edge* from_y = nullptr;
  for (const Edge& e : m.regular) {
    if (e.target == x) into_x = &e;
    if (e.source == y) from_y = &e;
  }
  if (into_x == nullptr || from_y == nullptr)
    throw Error(ErrorKind::InvalidMultiword, "contracted endpoints are not matched");

  for (const Edge& e : m.regular) {
    if (&e == into_x || &e == from_y) continue;
    out.regular.push_back(Edge{back(e.source), e.label, back(e.target)});
  }
  if (into_x == from_y) {
    out.singular.push_back(canonical_rotation(into_x->label));
    std::sort(out.singular.begin(), out.singular.end());
  } else {
    out.regular.push_back(
        Edge{back(into_x->source), concat(into_x->label, from_y->label), back(from_y->target)});
  }
  std::sort(out.regular.begin(), out.regular.end());
  return out;
}

Multiword iterated_contraction(const Multiword& m, int i, const Boundary& y) {
  const Boundary block = boundary_tensor(boundary_dual(y), y);
  if (!is_subboundary(m.boundary, i, block))
    throw Error(ErrorKind::NotSubboundary,
                "block Y^bot (x) Y of size " + std::to_string(block.size) + " is not a subboundary at offset " +
                    std::to_string(i));
  Multiword cur = m;
  for (int k = y.size; k >= 1; --k) cur = elementary_contraction(cur, i + k);
  return cur;
}

Multiword permute_blocks(const Multiword& m, const std::vector<int>& sizes,
                         const std::vector<int>& order) {
  const int nb = static_cast<int>(sizes.size());
  if (static_cast<int>(order.size()) != nb)
    throw Error(ErrorKind::OutOfRange, "block order has wrong length");
  std::vector<int> start(nb + 1, 0);
  for (int k = 0; k < nb; ++k) start[k + 1] = start[k] + sizes[k];
  if (start[nb] != m.boundary.size) throw Error(ErrorKind::BoundaryMismatch, "block sizes do not cover boundary");
  std::vector<int> newpos(m.boundary.size + 1, 0);
  int cursor = 0;
  std::vector<bool> used(nb, false);
  for (int k = 0; k < nb; ++k) {
    const int blk = order[k];
    if (blk < 0 || blk >= nb || used[blk]) throw Error(ErrorKind::OutOfRange, "block order is not a permutation");
    used[blk] = true;
    for (int p = 1; p <= sizes[blk]; ++p) newpos[start[blk] + p] = cursor + p;
    cursor += sizes[blk];
  }
  Multiword out;
  out.boundary.size = m.boundary.size;
  for (int i : m.boundary.left) out.boundary.left.push_back(newpos[i]);
  std::sort(out.boundary.left.begin(), out.boundary.left.end());
  for (const Edge& e : m.regular) out.regular.push_back(Edge{newpos[e.source], e.label, newpos[e.target]});
  std::sort(out.regular.begin(), out.regular.end());
  out.singular = m.singular;
  return out;
}

std::size_t total_label_length(const Multiword& m) {
  std::size_t n = 0;
  for (const Edge& e : m.regular) n += e.label.size();
  for (const Word& w : m.singular) n += w.size();
  return n;
}

std::string boundary_to_string(const Boundary& b) {
  std::string out = std::to_string(b.size) + " left=";
  for (std::size_t k = 0; k < b.left.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(b.left[k]);
  }
  return out;
}

std::string to_text(const Multiword& m) {
  std::ostringstream os;
  os << "boundary " << boundary_to_string(m.boundary) << "\n";
  for (const Edge& e : m.regular)
    os << e.source << " -> " << e.target << " : " << (e.label.empty() ? "eps" : word_to_string(e.label))
       << "\n";
  for (const Word& w : m.singular) os << "cycle : " << (w.empty() ? "eps" : word_to_string(w)) << "\n";
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Word parse_label(const std::string& s) {
  std::istringstream is(s);
  Word w;
  std::string tok;
  while (is >> tok) w.push_back(tok);
  if (w.size() == 1 && w[0] == "eps") w.clear();
  return w;
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "expected an integer, got '" + s + "'");
  }
}

}  // namespace

Boundary parse_boundary_line(const std::string& line, const std::string& keyword) {
  std::istringstream is(trim(line));
  std::string kw, size, left;
  is >> kw >> size;
  std::getline(is, left);
  left = trim(left);
  if (kw != keyword || left.rfind("left=", 0) != 0)
    throw Error(ErrorKind::Parse, "expected '" + keyword + " <n> left=<list>', got '" + line + "'");
  std::vector<int> l;
  std::string list = left.substr(5);
  std::istringstream ls(list);
  std::string item;
  while (std::getline(ls, item, ',')) {
    item = trim(item);
    if (!item.empty()) l.push_back(parse_int(item));
  }
  return Boundary(parse_int(size), l);
}

Multiword parse_multiword(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n' || c == ';') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  lines.push_back(cur);
  std::optional<Boundary> b;
  std::vector<Edge> edges;
  std::vector<Word> cycles;
  for (const std::string& raw : lines) {
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.rfind("boundary", 0) == 0) {
      if (b) throw Error(ErrorKind::Parse, "duplicate boundary line");
      b = parse_boundary_line(line, "boundary");
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "malformed multiword line '" + line + "'");
    const std::string head = trim(line.substr(0, colon));
    const Word label = parse_label(line.substr(colon + 1));
    if (head == "cycle") {
      cycles.push_back(label);
      continue;
    }
    const auto arrow = head.find("->");
    if (arrow == std::string::npos) throw Error(ErrorKind::Parse, "malformed edge line '" + line + "'");
    edges.push_back(Edge{parse_int(trim(head.substr(0, arrow))), label, parse_int(trim(head.substr(arrow + 2)))});
  }
  if (!b) throw Error(ErrorKind::Parse, "multiword text lacks a boundary line");
  return make_multiword(*b, std::move(edges), std::move(cycles));
}

}  // namespace coword
