#include "semitop/structure.hpp"

#include <algorithm>
#include <deque>

namespace semitop {

  bool IdealData::contains(Element a) const {
    return std::binary_search(elements.begin(), elements.end(), a);
  }

  std::vector<Element> idempotents(FiniteSemigroup const& s) {
    std::vector<Element> out;
    for (Element e = 0; e < s.order(); ++e) {
      if (s.mul(e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  bool is_band(FiniteSemigroup const& s) {
    return idempotents(s).size() == s.order();
  }

  std::vector<Element> ideal_closure(FiniteSemigroup const& s, std::vector<Element> generators) {
    std::vector<bool>   in(s.order(), false);
    std::deque<Element> queue;
    for (auto g : generators) {
      if (!in.at(g)) {
        in[g] = true;
        queue.push_back(g);
      }
    }
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (Element a = 0; a < s.order(); ++a) {
        for (Element y : {s.mul(a, x), s.mul(x, a)}) {
          if (!in[y]) {
            in[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
    std::vector<Element> out;
    for (Element a = 0; a < s.order(); ++a) {
      if (in[a]) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<Element> principal_ideal(FiniteSemigroup const& s, Element a) {
    return ideal_closure(s, {a});
  }

  bool is_ideal(FiniteSemigroup const& s, std::vector<Element> const& subset) {
    if (subset.empty()) {
      return false;
    }
    std::vector<bool> in(s.order(), false);
    for (auto x : subset) {
      if (x >= s.order()) {
        return false;
      }
      in[x] = true;
    }
    for (auto x : subset) {
      for (Element a = 0; a < s.order(); ++a) {
        if (!in[s.mul(a, x)] || !in[s.mul(x, a)]) {
          return false;
        }
      }
    }
    return true;
  }

  IdealData minimal_ideal(FiniteSemigroup const& s) {
    std::vector<Element> best;
    for (Element a = 0; a < s.order(); ++a) {
      auto ideal = principal_ideal(s, a);
      if (best.empty() || ideal.size() < best.size()) {
        best = std::move(ideal);
      }
    }
    return IdealData{std::move(best), true};
  }

  bool is_rectangular_band(FiniteSemigroup const& s, IdealData const& ideal) {
    for (auto x : ideal.elements) {
      if (s.mul(x, x) != x) {
        return false;
      }
      for (auto y : ideal.elements) {
        if (s.mul(s.mul(x, y), x) != x) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_rectangular_band(FiniteSemigroup const& s) {
    IdealData all;
    all.elements.resize(s.order());
    for (Element a = 0; a < s.order(); ++a) {
      all.elements[a] = a;
    }
    return is_rectangular_band(s, all);
  }

  bool is_regular(FiniteSemigroup const& s) {
    for (Element a = 0; a < s.order(); ++a) {
      bool found = false;
      for (Element t = 0; t < s.order() && !found; ++t) {
        found = s.mul(s.mul(a, t), a) == a;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  MaximalSubgroupData maximal_subgroup(FiniteSemigroup const& s, Element e) {
    if (e >= s.order() || s.mul(e, e) != e) {
      throw NotIdempotent(e);
    }
    std::vector<bool> in_ese(s.order(), false);
    for (Element a = 0; a < s.order(); ++a) {
      in_ese[s.mul(s.mul(e, a), e)] = true;
    }
    MaximalSubgroupData out;
    out.idempotent = e;
    for (Element g = 0; g < s.order(); ++g) {
      if (!in_ese[g]) {
        continue;
      }
      for (Element h = 0; h < s.order(); ++h) {
        if (in_ese[h] && s.mul(g, h) == e && s.mul(h, g) == e) {
          out.elements.push_back(g);
          break;
        }
      }
    }
    std::vector<std::size_t> position(s.order(), 0);
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      position[out.elements[i]] = i;
    }
    out.table.assign(out.elements.size(), std::vector<std::size_t>(out.elements.size()));
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      for (std::size_t j = 0; j < out.elements.size(); ++j) {
        out.table[i][j] = position[s.mul(out.elements[i], out.elements[j])];
      }
    }
    return out;
  }

  bool is_aperiodic(FiniteSemigroup const& s) {
    for (auto e : idempotents(s)) {
      if (maximal_subgroup(s, e).order() != 1) {
        return false;
      }
    }
    return true;
  }

  bool is_aperiodic_by_powers(FiniteSemigroup const& s) {
    std::size_t const n = s.order();
    for (Element a = 0; a < n; ++a) {
      Element p = a;  // a^1
      for (std::size_t k = 1; k < n; ++k) {
        p = s.mul(p, a);
      }
      if (s.mul(p, a) != p) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<Element>> j_classes(FiniteSemigroup const& s) {
    std::vector<std::vector<Element>> ideals(s.order());
    for (Element a = 0; a < s.order(); ++a) {
      ideals[a] = principal_ideal(s, a);
    }
    std::vector<bool>                 placed(s.order(), false);
    std::vector<std::vector<Element>> out;
    for (Element a = 0; a < s.order(); ++a) {
      if (placed[a]) {
        continue;
      }
      std::vector<Element> cls;
      for (Element b = a; b < s.order(); ++b) {
        if (!placed[b] && ideals[b] == ideals[a]) {
          placed[b] = true;
          cls.push_back(b);
        }
      }
      out.push_back(std::move(cls));
    }
    return out;
  }

  namespace {
    std::vector<Element> set_minus(std::vector<Element> const& a, std::vector<Element> const& b) {
      std::vector<Element> out;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      return out;
    }

    bool subset_of(std::vector<Element> const& a, std::vector<Element> const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
  }  // namespace

  PrincipalSeries principal_series(FiniteSemigroup const& s) {
    auto const classes = j_classes(s);
    std::vector<std::vector<Element>> class_ideal(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      class_ideal[c] = principal_ideal(s, classes[c].front());
    }

    PrincipalSeries series;
    std::vector<Element> current(s.order());
    for (Element a = 0; a < s.order(); ++a) {
      current[a] = a;
    }
    std::vector<bool> removed(classes.size(), false);
    std::size_t       remaining = classes.size();

    // Strip a J-maximal class of the current ideal until one class is left;
    // what remains is then the minimal ideal.
    while (true) {
      series.ideals.push_back(IdealData{current, false});
      if (remaining == 1) {
        break;
      }
      std::size_t pick = classes.size();
      for (std::size_t c = 0; c < classes.size() && pick == classes.size(); ++c) {
        if (removed[c]) {
          continue;
        }
        bool maximal = true;
        for (std::size_t d = 0; d < classes.size() && maximal; ++d) {
          if (d != c && !removed[d] && subset_of(classes[c], class_ideal[d])) {
            maximal = false;
          }
        }
        if (maximal) {
          pick = c;
        }
      }
      removed[pick] = true;
      --remaining;
      current = set_minus(current, classes[pick]);
    }
    series.ideals.back().is_minimal = true;

    for (std::size_t j = 0; j + 1 < series.ideals.size(); ++j) {
      auto const cls  = set_minus(series.ideals[j].elements, series.ideals[j + 1].elements);
      bool       null = true;
      for (auto a : cls) {
        for (auto b : cls) {
          null = null && !std::binary_search(cls.begin(), cls.end(), s.mul(a, b));
        }
      }
      series.factors.push_back(null ? SeriesFactor::null : SeriesFactor::zero_simple);
    }
    series.factors.push_back(SeriesFactor::simple);

    if (s.order() <= PrincipalSeries::kCertifyLimit) {
      bool ok = true;
      for (std::size_t j = 0; j + 1 < series.ideals.size() && ok; ++j) {
        auto const& upper = series.ideals[j].elements;
        auto const& lower = series.ideals[j + 1].elements;
        ok                = is_ideal(s, upper) && is_ideal(s, lower);
        // No intermediate ideal: adding any single element of the difference
        // to the lower ideal regenerates the upper one.
        for (auto a : set_minus(upper, lower)) {
          auto gens = lower;
          gens.push_back(a);
          ok = ok && ideal_closure(s, gens) == upper;
        }
      }
      ok = ok && series.ideals.back().elements == minimal_ideal(s).elements;
      series.certified = ok;
    }
    return series;
  }

  FiniteSemigroup rees_quotient(FiniteSemigroup const& s, IdealData const& ideal) {
    if (!is_ideal(s, ideal.elements)) {
      throw NotAnIdeal("subset is not a two-sided ideal");
    }
    std::size_t const        n = s.order();
    std::vector<Element>     index(n);
    std::vector<std::string> names;
    Element                  next = 0;
    for (Element a = 0; a < n; ++a) {
      if (!ideal.contains(a)) {
        index[a] = next++;
        names.push_back(s.name(a));
      }
    }
    Element const zero = next;
    for (auto a : ideal.elements) {
      index[a] = zero;
    }
    names.push_back("0");
    std::size_t const    m = zero + 1;
    std::vector<Element> t(m * m, zero);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (index[a] != zero && index[b] != zero) {
          t[index[a] * m + index[b]] = index[s.mul(a, b)];
        }
      }
    }
    return validate_flat(m, std::move(t), std::move(names));
  }

  FiniteSemigroup restrict_to(FiniteSemigroup const& s, std::vector<Element> const& elements) {
    std::vector<Element> index(s.order(), static_cast<Element>(-1));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      index.at(elements[i]) = static_cast<Element>(i);
    }
    std::size_t const        m = elements.size();
    std::vector<Element>     t(m * m);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back(s.name(elements[i]));
      for (std::size_t j = 0; j < m; ++j) {
        Element p = index[s.mul(elements[i], elements[j])];
        if (p == static_cast<Element>(-1)) {
          throw Error("subset is not closed under multiplication");
        }
        t[i * m + j] = p;
      }
    }
    return validate_flat(m, std::move(t), std::move(names));
  }

}  // namespace semitop
