#pragma once

// MAT(R): a morphism n -> m is an n x m matrix acting on row vectors, so
// composition f g is the matrix product F G. Dagger is transpose, and the
// reverse derivative is pi1 followed by the transpose.

#include <string>
#include <utility>
#include <vector>

#include "rdcat/category.hpp"
#include "rdcat/literal.hpp"
#include "rdcat/rig.hpp"
#include "rdcat/text.hpp"

namespace rdcat {

template <Rig R>
class MatMorphism {
 public:
  using value_type = typename R::value_type;

  MatMorphism(R rig, std::size_t rows, std::size_t cols)
      : rig_(std::move(rig)), rows_(rows), cols_(cols), entries_(rows * cols, Cell{rig_.zero()}) {}

  MatMorphism(R rig, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
      : rig_(std::move(rig)), rows_(rows), cols_(cols), entries_(entries.begin(), entries.end()) {
    if (entries_.size() != rows_ * cols_) {
      throw SignatureError("matrix " + signature(rows_, cols_) + " needs " + std::to_string(rows_ * cols_) +
                           " entries, got " + std::to_string(entries_.size()));
    }
  }

  std::size_t dom() const { return rows_; }
  std::size_t cod() const { return cols_; }
  const R& rig() const { return rig_; }

  const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j].value; }
  value_type& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j].value; }

  bool operator==(const MatMorphism& o) const {
    if (!(rig_ == o.rig_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (!rig_.equal(entries_[k].value, o.entries_[k].value)) return false;
    }
    return true;
  }

 private:
  R rig_;
  std::size_t rows_;
  std::size_t cols_;
  // A wrapper so that bool entries do not land in std::vector<bool>.
  struct Cell {
    value_type value;
    Cell(const value_type& v) : value(v) {}  // NOLINT(google-explicit-constructor)
  };
  std::vector<Cell> entries_;
};

template <Rig R>
std::string to_string(const MatMorphism<R>& a) {
  std::vector<std::string> rows;
  if (a.dom() * a.cod() != 0) {
    for (std::size_t i = 0; i < a.dom(); ++i) {
      std::string row;
      for (std::size_t j = 0; j < a.cod(); ++j) {
        if (j > 0) row += ' ';
        row += a.rig().to_string(a(i, j));
      }
      rows.push_back(std::move(row));
    }
  }
  return "mat(" + signature(a) + ")" + literal_body(rows);
}

/// Parses `mat(n->m){ r11 r12 ; r21 r22 ; ... }` (row-major). An empty matrix
/// has an empty body.
template <Rig R>
MatMorphism<R> parse_mat_morphism(Cursor& in, const R& rig) {
  const auto h = read_literal_header(in, "mat");
  MatMorphism<R> a(rig, h.dom, h.cod);
  const std::size_t rows = h.dom * h.cod == 0 ? 0 : h.dom;
  read_literal_body(in, h, rows, [&](std::size_t i) {
    for (std::size_t j = 0; j < h.cod; ++j) {
      in.skip_ws();
      const std::size_t start = in.offset();
      auto token = in.take_while([](char c) { return c != ';' && c != '}' && !std::isspace(static_cast<unsigned char>(c)); });
      if (token.empty()) in.fail("row " + std::to_string(i + 1) + " needs " + std::to_string(h.cod) + " entries");
      try {
        a(i, j) = rig.parse(token);
      } catch (const std::exception& e) {
        in.fail_at(start, "'" + std::string(token) + "' is not an element of rig " + rig.name() + " (" + e.what() + ")");
      }
    }
  });
  return a;
}

template <Rig R>
MatMorphism<R> parse_mat_morphism(const R& rig, std::string_view text) {
  Cursor in(text);
  auto a = parse_mat_morphism(in, rig);
  if (!in.at_end()) in.fail("unexpected trailing input");
  return a;
}

template <Rig R>
struct MatCategory {
  using Morphism = MatMorphism<R>;

  R rig{};
  Fault fault = Fault::none;

  std::string name() const { return "mat"; }

  Morphism identity(std::size_t n) const {
    Morphism a(rig, n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = rig.one();
    return a;
  }

  Morphism compose(const Morphism& f, const Morphism& g) const {
    require_composable(f, g);
    Morphism out(rig, f.dom(), g.cod());
    for (std::size_t i = 0; i < f.dom(); ++i) {
      for (std::size_t k = 0; k < g.cod(); ++k) {
        auto acc = rig.zero();
        for (std::size_t j = 0; j < f.cod(); ++j) acc = rig.add(acc, rig.mul(f(i, j), g(j, k)));
        out(i, k) = acc;
      }
    }
    return out;
  }

  /// [F | G]
  Morphism pair(const Morphism& f, const Morphism& g) const {
    if (f.dom() != g.dom()) throw SignatureError("pairing domains differ: " + signature(f) + " vs " + signature(g));
    Morphism out(rig, f.dom(), f.cod() + g.cod());
    for (std::size_t i = 0; i < f.dom(); ++i) {
      for (std::size_t j = 0; j < f.cod(); ++j) out(i, j) = f(i, j);
      for (std::size_t j = 0; j < g.cod(); ++j) out(i, f.cod() + j) = g(i, j);
    }
    return out;
  }

  Morphism projection(Split s, Side side) const {
    const std::size_t width = side == Side::left ? s.left : s.right;
    const std::size_t offset = side == Side::left ? 0 : s.left;
    Morphism out(rig, s.total(), width);
    for (std::size_t j = 0; j < width; ++j) out(offset + j, j) = rig.one();
    return out;
  }

  Morphism add(const Morphism& f, const Morphism& g) const {
    require_same_signature(f, g, "sum of morphisms with different signatures");
    Morphism out(rig, f.dom(), f.cod());
    for (std::size_t i = 0; i < f.dom(); ++i) {
      for (std::size_t j = 0; j < f.cod(); ++j) out(i, j) = rig.add(f(i, j), g(i, j));
    }
    return out;
  }

  Morphism zero(std::size_t a, std::size_t b) const { return Morphism(rig, a, b); }
  Morphism bang(std::size_t a) const { return zero(a, 0); }

  /// The dagger: transpose.
  Morphism transpose(const Morphism& f) const {
    Morphism out(rig, f.cod(), f.dom());
    for (std::size_t i = 0; i < f.dom(); ++i) {
      for (std::size_t j = 0; j < f.cod(); ++j) out(j, i) = f(i, j);
    }
    return out;
  }

  /// D[A] = pi1 A, the block matrix [0 ; A].
  Morphism forward(const Morphism& f) const {
    const std::size_t n = f.dom();
    Morphism out(rig, 2 * n, f.cod());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < f.cod(); ++j) out(n + i, j) = f(i, j);
    }
    return out;
  }

  /// R[A] = pi1 A^T, the block matrix [0 ; A^T] of shape (n + m) x n.
  Morphism reverse(const Morphism& f) const {
    const std::size_t n = f.dom();
    const std::size_t m = f.cod();
    Morphism out(rig, n + m, n);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        out(n + j, i) = fault == Fault::mat_reverse_transposed_block ? f(n - 1 - i, m - 1 - j) : f(i, j);
      }
    }
    return out;
  }

  /// Contextual dagger from the transpose: for g: C x A -> B with row blocks
  /// [G_C ; G_A], returns [0 ; G_A^T]: C x B -> A.
  Morphism contextual_transpose(const Morphism& g, Split s) const {
    if (g.dom() != s.total()) {
      throw SignatureError("contextual dagger split " + signature(s.left, s.right) + " does not match " + signature(g));
    }
    Morphism out(rig, s.left + g.cod(), s.right);
    for (std::size_t b = 0; b < g.cod(); ++b) {
      for (std::size_t a = 0; a < s.right; ++a) out(s.left + b, a) = g(s.left + a, b);
    }
    return out;
  }

  Comparison compare(const Morphism& f, const Morphism& g) const {
    if (f == g) return {};
    return {false, show(f), show(g), "entries differ"};
  }

  std::string show(const Morphism& f) const { return to_string(f); }

  Morphism parse(std::string_view text) const { return parse_mat_morphism(rig, text); }

  Morphism generate(Rng& rng, std::size_t dom, std::size_t cod, const GeneratorCaps&) const {
    Morphism out(rig, dom, cod);
    for (std::size_t i = 0; i < dom; ++i) {
      for (std::size_t j = 0; j < cod; ++j) out(i, j) = rig.sample(rng);
    }
    return out;
  }

  Morphism generate_linear(Rng& rng, std::size_t dom, std::size_t cod, const GeneratorCaps& caps) const {
    return generate(rng, dom, cod, caps);
  }
};

}  // namespace rdcat
