#include <deque>

#include "semitop/group_completion.hpp"
#include "semitop/smith.hpp"

namespace semitop {

  GroupPresentation presentation(FiniteSemigroup const& s) {
    GroupPresentation p;
    p.generator_count = s.order();
    p.relators.reserve(s.order() * s.order() + 1);
    for (Element a = 0; a < s.order(); ++a) {
      for (Element b = 0; b < s.order(); ++b) {
        p.relators.push_back({GroupPresentation::gen(a), GroupPresentation::gen(b),
                              GroupPresentation::inv(s.mul(a, b))});
      }
    }
    if (auto e = s.identity()) {
      p.relators.push_back({GroupPresentation::gen(*e)});
    }
    return p;
  }

  FiniteSemigroup FiniteGroupTable::as_semigroup() const {
    return validate_flat(order, table);
  }

  namespace {

    class CosetTable {
     public:
      using Coset                     = std::int32_t;
      static constexpr Coset kUndefined = -1;

      CosetTable(GroupPresentation const& p, std::size_t cap)
          : _p(p), _width(2 * p.generator_count), _cap(cap) {
        new_coset();
      }

      void enumerate() {
        for (std::size_t c = 0; c < _parent.size(); ++c) {
          auto const alpha = static_cast<Coset>(c);
          for (auto const& w : _p.relators) {
            if (!alive(alpha)) {
              break;
            }
            while (alive(alpha) && !scan(alpha, w, true)) {
              make_room();
            }
          }
          for (std::size_t x = 0; x < _width && alive(alpha); ++x) {
            while (alive(alpha) && entry(alpha, x) == kUndefined) {
              if (!has_room()) {
                make_room();
                continue;
              }
              define(alpha, x);
            }
          }
        }
      }

      FiniteGroupTable result() const {
        std::vector<Coset> number(_parent.size(), kUndefined);
        std::vector<Coset> live;
        for (std::size_t c = 0; c < _parent.size(); ++c) {
          if (alive(static_cast<Coset>(c))) {
            number[c] = static_cast<Coset>(live.size());
            live.push_back(static_cast<Coset>(c));
          }
        }
        // Each coset is the image of the identity coset under some word; the
        // group acts regularly, so g * h is g followed by the word of h.
        std::vector<std::vector<std::size_t>> word(_parent.size());
        std::vector<bool>                     seen(_parent.size(), false);
        std::deque<Coset>                     queue{0};
        seen[0] = true;
        while (!queue.empty()) {
          Coset c = queue.front();
          queue.pop_front();
          for (std::size_t x = 0; x < _width; ++x) {
            Coset d = entry(c, x);
            if (!seen[d]) {
              seen[d] = true;
              word[d] = word[c];
              word[d].push_back(x);
              queue.push_back(d);
            }
          }
        }
        FiniteGroupTable g;
        g.order = live.size();
        g.table.resize(g.order * g.order);
        for (std::size_t a = 0; a < g.order; ++a) {
          for (std::size_t b = 0; b < g.order; ++b) {
            Coset c = live[a];
            for (auto x : word[live[b]]) {
              c = entry(c, x);
            }
            g.table[a * g.order + b] = static_cast<Element>(number[c]);
          }
        }
        for (std::size_t s = 0; s < _p.generator_count; ++s) {
          g.generator_images.push_back(static_cast<Element>(number[entry(0, GroupPresentation::gen(s))]));
        }
        return g;
      }

     private:
      bool alive(Coset c) const {
        return _parent[c] == c;
      }
      Coset& entry(Coset c, std::size_t x) {
        return _table[static_cast<std::size_t>(c) * _width + x];
      }
      Coset entry(Coset c, std::size_t x) const {
        return _table[static_cast<std::size_t>(c) * _width + x];
      }
      static std::size_t inverse(std::size_t x) {
        return x ^ 1U;
      }
      bool has_room() const {
        return _active < _cap;
      }

      Coset new_coset() {
        auto const c = static_cast<Coset>(_parent.size());
        _parent.push_back(c);
        _table.resize(_table.size() + _width, kUndefined);
        ++_active;
        return c;
      }

      void define(Coset c, std::size_t x) {
        Coset d                = new_coset();
        entry(c, x)            = d;
        entry(d, inverse(x))   = c;
      }

      void make_room() {
        std::size_t const before = _active;
        lookahead();
        if (_active == before && !has_room()) {
          throw CosetCapExceeded(_cap);
        }
      }

      // Scan w from alpha, defining cosets if allowed.  Returns false only if
      // a definition was needed and the cap left no room.
      bool scan(Coset alpha, GroupPresentation::Word const& w, bool fill) {
        Coset       f = alpha;
        Coset       b = alpha;
        std::size_t i = 0;
        std::size_t j = w.size();  // one past the last unscanned letter
        while (true) {
          while (i < j && entry(f, w[i]) != kUndefined) {
            f = entry(f, w[i++]);
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return true;
          }
          while (j > i && entry(b, inverse(w[j - 1])) != kUndefined) {
            b = entry(b, inverse(w[--j]));
          }
          if (j == i) {
            coincidence(f, b);
            return true;
          }
          if (j == i + 1) {
            entry(f, w[i])             = b;
            entry(b, inverse(w[i]))    = f;
            return true;
          }
          if (!fill) {
            return true;
          }
          if (!has_room()) {
            return false;
          }
          define(f, w[i]);
        }
      }

      void lookahead() {
        std::size_t before = 0;
        do {
          before = _active;
          for (std::size_t c = 0; c < _parent.size(); ++c) {
            for (auto const& w : _p.relators) {
              if (!alive(static_cast<Coset>(c))) {
                break;
              }
              scan(static_cast<Coset>(c), w, false);
            }
          }
        } while (_active < before);
      }

      Coset rep(Coset c) {
        Coset r = c;
        while (_parent[r] != r) {
          r = _parent[r];
        }
        while (_parent[c] != r) {
          Coset next = _parent[c];
          _parent[c] = r;
          c          = next;
        }
        return r;
      }

      void merge(Coset a, Coset b, std::vector<Coset>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) {
          return;
        }
        if (a > b) {
          std::swap(a, b);
        }
        _parent[b] = a;
        --_active;
        queue.push_back(b);
      }

      void coincidence(Coset a, Coset b) {
        std::vector<Coset> queue;
        merge(a, b, queue);
        for (std::size_t k = 0; k < queue.size(); ++k) {
          Coset const gamma = queue[k];
          for (std::size_t x = 0; x < _width; ++x) {
            Coset const delta = entry(gamma, x);
            if (delta == kUndefined) {
              continue;
            }
            entry(delta, inverse(x)) = kUndefined;
            Coset const mu           = rep(gamma);
            Coset const nu           = rep(delta);
            if (entry(mu, x) != kUndefined) {
              merge(nu, entry(mu, x), queue);
            } else if (entry(nu, inverse(x)) != kUndefined) {
              merge(mu, entry(nu, inverse(x)), queue);
            } else {
              entry(mu, x)          = nu;
              entry(nu, inverse(x)) = mu;
            }
          }
        }
      }

      GroupPresentation const& _p;
      std::size_t              _width;
      std::size_t              _cap;
      std::size_t              _active = 0;
      std::vector<Coset>       _parent;
      std::vector<Coset>       _table;
    };

  }  // namespace

  FiniteGroupTable todd_coxeter(GroupPresentation const& p, std::size_t max_cosets) {
    if (max_cosets == 0) {
      throw CosetCapExceeded(0);
    }
    for (auto const& w : p.relators) {
      for (auto x : w) {
        if (x >= 2 * p.generator_count) {
          throw Error("relator references generator " + std::to_string(x / 2) + " of "
                      + std::to_string(p.generator_count));
        }
      }
    }
    CosetTable t(p, max_cosets);
    t.enumerate();
    return t.result();
  }

  void check_group(FiniteGroupTable const& g) {
    std::size_t const n = g.order;
    if (n == 0 || g.table.size() != n * n) {
      throw Error("group table has the wrong shape");
    }
    for (Element a = 0; a < n; ++a) {
      if (g.mul(0, a) != a || g.mul(a, 0) != a) {
        throw Error("element 0 is not the identity of the group table");
      }
      bool has_inverse = false;
      for (Element b = 0; b < n && !has_inverse; ++b) {
        has_inverse = g.mul(a, b) == 0;
      }
      if (!has_inverse) {
        throw Error("group element " + std::to_string(a) + " has no inverse");
      }
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
            throw Error("group table is not associative");
          }
        }
      }
    }
  }

  FiniteGroupTable group_completion(FiniteSemigroup const& s, std::optional<std::size_t> max_cosets) {
    auto g = todd_coxeter(presentation(s), max_cosets.value_or(4 * s.order()));
    check_group(g);
    for (Element a = 0; a < s.order(); ++a) {
      for (Element b = 0; b < s.order(); ++b) {
        if (g.mul(g.generator_images[a], g.generator_images[b]) != g.generator_images[s.mul(a, b)]) {
          throw Error("coset enumeration produced a map that is not a homomorphism");
        }
      }
    }
    return g;
  }

  bool is_simply_connected(FiniteSemigroup const& s) {
    return group_completion(s).order == 1;
  }

  HomologyGroup abelianization(FiniteGroupTable const& g) {
    std::size_t const                 n = g.order;
    std::vector<SparseMatrix::Column> columns(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        // e_a + e_b - e_ab
        auto& col = columns[static_cast<std::size_t>(a) * n + b];
        col.emplace_back(a, 1);
        col.emplace_back(b, 1);
        col.emplace_back(g.mul(a, b), -1);
      }
    }
    auto const snf = smith_normal_form(SparseMatrix::from_columns(n, std::move(columns)));
    return HomologyGroup::make(n - snf.rank, snf.torsion());
  }

}  // namespace semitop
