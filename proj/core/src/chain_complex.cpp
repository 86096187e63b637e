#include <chrono>
#include <limits>

#include "semitop/homology.hpp"
#include "semitop/smith.hpp"

namespace semitop {

  HomologyGroup HomologyGroup::make(std::size_t free_rank, std::vector<BigInt> torsion) {
    std::vector<BigInt> nonzero;
    for (auto& t : torsion) {
      if (t != 0) {
        nonzero.push_back(abs(t));
      }
    }
    HomologyGroup h;
    h.free_rank = free_rank;
    for (auto& f : invariant_factors(std::move(nonzero))) {
      if (f > 1) {
        h.torsion.push_back(std::move(f));
      }
    }
    return h;
  }

  std::string HomologyGroup::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string out;
    if (free_rank > 0) {
      out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    }
    for (auto const& t : torsion) {
      out += (out.empty() ? "" : " + ") + std::string("Z/") + semitop::to_string(t);
    }
    return out;
  }

  HomologyGroup direct_sum(HomologyGroup const& a, HomologyGroup const& b) {
    auto torsion = a.torsion;
    torsion.insert(torsion.end(), b.torsion.begin(), b.torsion.end());
    return HomologyGroup::make(a.free_rank + b.free_rank, std::move(torsion));
  }

  nlohmann::json to_json(HomologyGroup const& h) {
    nlohmann::json torsion = nlohmann::json::array();
    for (auto const& t : h.torsion) {
      if (t.fits_slong_p()) {
        torsion.push_back(t.get_si());
      } else {
        torsion.push_back(t.get_str());
      }
    }
    return nlohmann::json{{"group", h.to_string()}, {"free_rank", h.free_rank}, {"torsion", torsion}};
  }

  void check_chain_complex(ChainComplex const& c) {
    if (c.boundaries.size() + 1 != c.dims.size()) {
      throw Error("chain complex needs one boundary matrix per positive degree");
    }
    for (std::size_t q = 1; q <= c.qmax(); ++q) {
      auto const& d = c.boundary(q);
      if (d.rows() != c.dims[q - 1] || d.cols() != c.dims[q]) {
        throw Error("boundary d_" + std::to_string(q) + " has the wrong shape");
      }
      if (q >= 2 && !multiply(c.boundary(q - 1), d).is_zero()) {
        throw Error("d_" + std::to_string(q - 1) + " d_" + std::to_string(q) + " is not zero");
      }
    }
  }

  ChainComplex bar_complex(FiniteSemigroup const& s, std::size_t qmax, BarComplexOptions options) {
    if (options.normalized && !s.identity()) {
      throw NotAMonoid("the normalized bar complex needs a monoid");
    }
    // Generators of C_1, in index order.
    std::vector<Element> gens;
    std::vector<std::int64_t> position(s.order(), -1);
    for (Element a = 0; a < s.order(); ++a) {
      if (options.normalized && a == *s.identity()) {
        continue;
      }
      position[a] = static_cast<std::int64_t>(gens.size());
      gens.push_back(a);
    }
    std::size_t const k = gens.size();

    ChainComplex c;
    c.dims.push_back(1);
    std::size_t rank = 1;
    for (std::size_t q = 1; q <= qmax; ++q) {
      if (k != 0 && rank > std::numeric_limits<std::size_t>::max() / k) {
        throw DegreeTooLarge(q, std::numeric_limits<std::size_t>::max(), options.column_cap);
      }
      rank *= k;
      if (rank > options.column_cap) {
        throw DegreeTooLarge(q, rank, options.column_cap);
      }
      c.dims.push_back(rank);
    }

    std::vector<std::size_t> digits;
    std::vector<std::size_t> face;
    for (std::size_t q = 1; q <= qmax; ++q) {
      std::size_t const                 cols = c.dims[q];
      std::vector<SparseMatrix::Column> columns(cols);
      digits.assign(q, 0);
      face.resize(q > 0 ? q - 1 : 0);
      auto const encode = [k](std::vector<std::size_t> const& d) {
        std::size_t idx = 0;
        for (auto x : d) {
          idx = idx * k + x;
        }
        return idx;
      };
      for (std::size_t col = 0; col < cols; ++col) {
        // digits[0] is s_1, the most significant digit.
        std::size_t rest = col;
        for (std::size_t i = q; i-- > 0;) {
          digits[i] = rest % k;
          rest /= k;
        }
        auto& out = columns[col];
        // d_0 drops s_1.
        std::copy(digits.begin() + 1, digits.end(), face.begin());
        out.emplace_back(static_cast<SparseMatrix::Index>(encode(face)), 1);
        // d_i multiplies s_i and s_{i+1}.
        for (std::size_t i = 1; i < q; ++i) {
          Element const p = s.mul(gens[digits[i - 1]], gens[digits[i]]);
          if (position[p] < 0) {
            continue;  // degenerate face
          }
          std::size_t w = 0;
          for (std::size_t x = 0; x < q; ++x) {
            if (x == i - 1) {
              face[w++] = static_cast<std::size_t>(position[p]);
            } else if (x != i) {
              face[w++] = digits[x];
            }
          }
          out.emplace_back(static_cast<SparseMatrix::Index>(encode(face)), i % 2 == 0 ? 1 : -1);
        }
        // d_q drops s_q.
        std::copy(digits.begin(), digits.end() - 1, face.begin());
        out.emplace_back(static_cast<SparseMatrix::Index>(encode(face)), q % 2 == 0 ? 1 : -1);
      }
      c.boundaries.push_back(SparseMatrix::from_columns(c.dims[q - 1], std::move(columns)));
    }
    return c;
  }

  namespace {
    void require_degree(ChainComplex const& c, std::size_t q) {
      if (q + 1 > c.qmax()) {
        throw InsufficientDegrees("H_" + std::to_string(q) + " needs the complex through degree "
                                  + std::to_string(q + 1) + ", have " + std::to_string(c.qmax()));
      }
    }
  }  // namespace

  HomologyGroup homology(ChainComplex const& c, std::size_t q) {
    require_degree(c, q);
    std::size_t const rank_out = q == 0 ? 0 : smith_normal_form(c.boundary(q)).rank;
    auto const        in       = smith_normal_form(c.boundary(q + 1));
    return HomologyGroup::make(c.dims[q] - rank_out - in.rank, in.torsion());
  }

  HomologyGroup homology_via_kernel_basis(ChainComplex const& c, std::size_t q) {
    require_degree(c, q);
    BigMatrix const out = q == 0 ? BigMatrix(0, c.dims[0]) : to_big(c.boundary(q));
    auto const      snf = smith_normal_form(out, true);
    BigMatrix const in  = kernel_coordinates(snf, to_big(c.boundary(q + 1)));
    auto const      img = smith_normal_form(in);
    return HomologyGroup::make(in.rows() - img.rank, img.torsion());
  }

  std::size_t rational_betti(ChainComplex const& c, std::size_t q) {
    require_degree(c, q);
    std::size_t const rank_out = q == 0 ? 0 : rational_rank(c.boundary(q));
    return c.dims[q] - rank_out - rational_rank(c.boundary(q + 1));
  }

  std::vector<HomologyGroup> homology_profile(ChainComplex const& c, BoundaryObserver const& observer) {
    std::size_t const                qmax = c.qmax();
    std::vector<std::size_t>         ranks(qmax + 2, 0);
    std::vector<std::vector<BigInt>> torsion(qmax + 2);
    for (std::size_t q = 1; q <= qmax; ++q) {
      auto const start = std::chrono::steady_clock::now();
      auto const snf   = smith_normal_form(c.boundary(q));
      ranks[q]         = snf.rank;
      torsion[q]       = snf.torsion();
      if (observer) {
        std::chrono::duration<double> const dt = std::chrono::steady_clock::now() - start;
        observer(q, c.boundary(q), dt.count());
      }
    }
    std::vector<HomologyGroup> out;
    for (std::size_t q = 0; q < qmax; ++q) {
      out.push_back(HomologyGroup::make(c.dims[q] - ranks[q] - ranks[q + 1], torsion[q + 1]));
    }
    return out;
  }

  std::vector<HomologyGroup> homology_profile(FiniteSemigroup const& s,
                                              std::size_t            qmax,
                                              BarComplexOptions      options) {
    return homology_profile(bar_complex(s, qmax, options));
  }

}  // namespace semitop
