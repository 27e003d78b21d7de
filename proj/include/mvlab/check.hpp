#pragma once

/**
 * @file check.hpp
 * @brief Law evaluation over tuples drawn from MV carriers.
 *
 * A TupleSpace holds the carriers a family of laws ranges over. Each law
 * names its slots (which carrier each variable lives in) and a predicate
 * returning true (holds), false (counterexample), or nullopt (the tuple is
 * outside the law's domain, e.g. a partial sum that is undefined).
 *
 * Tuples are exhaustive when every slot carrier is finite and no larger than
 * the budget's exhaustive limit. Otherwise the product of the Farey-order
 * enumerations is walked first (when each is small enough), followed by
 * `samples` seeded random tuples. Evaluation stops at the first counterexample.
 */

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvlab/mv_algebra.hpp"
#include "mvlab/report.hpp"

namespace mvlab {

struct Slot {
  std::size_t domain;
  std::string name;
};

class TupleSpace {
 public:
  explicit TupleSpace(Budget budget) : budget_(budget) {}

  std::size_t add(const MvAlgebra& a) {
    Domain d{a, {}, false, false};
    auto card = a.cardinality();
    if (card && *card <= budget_.exhaustive_limit) {
      d.elements = enumerate_elements(a, budget_.order);
      d.exhaustive = true;
      d.enumerated = true;
    } else if (!card) {
      try {
        auto es = enumerate_elements(a, budget_.order);
        if (es.size() <= budget_.exhaustive_limit) {
          d.elements = std::move(es);
          d.enumerated = true;
        }
      } catch (const error&) {
      }
    }
    domains_.push_back(std::move(d));
    return domains_.size() - 1;
  }

  const Budget& budget() const noexcept { return budget_; }
  const MvAlgebra& algebra(std::size_t domain) const { return domains_[domain].algebra; }

  template <class Pred>
  LawCheck check(std::string law, std::string statement, const std::vector<Slot>& slots, Pred&& pred) const {
    LawCheck out;
    out.law = std::move(law);
    out.statement = std::move(statement);

    bool exhaustive = true, enumerable = true;
    for (const auto& s : slots) {
      exhaustive = exhaustive && domains_[s.domain].exhaustive;
      enumerable = enumerable && domains_[s.domain].enumerated;
    }
    out.exhaustive = exhaustive;

    std::vector<MvElement> tuple(slots.size());
    auto evaluate = [&]() {
      std::optional<bool> r = pred(std::span<const MvElement>(tuple));
      if (!r) return true;
      ++out.cases;
      if (*r) return true;
      Assignment a;
      for (std::size_t i = 0; i < slots.size(); ++i) a.emplace_back(slots[i].name, tuple[i]);
      out.counterexample = std::move(a);
      return false;
    };

    if (enumerable && !slots.empty()) {
      // Odometer over the enumerations, last slot varying fastest.
      std::vector<std::size_t> idx(slots.size(), 0);
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (domains_[slots[i].domain].elements.empty()) return out;
        tuple[i] = domains_[slots[i].domain].elements[0];
      }
      for (bool done = false; !done;) {
        if (!evaluate()) return out;
        done = true;
        for (std::size_t k = slots.size(); k-- > 0;) {
          const auto& es = domains_[slots[k].domain].elements;
          if (++idx[k] < es.size()) {
            tuple[k] = es[idx[k]];
            done = false;
            break;
          }
          idx[k] = 0;
          tuple[k] = es[0];
        }
      }
    } else if (slots.empty()) {
      evaluate();
      return out;
    }

    if (exhaustive) return out;
    Sampler rng(budget_.seed);
    for (std::size_t n = 0; n < budget_.samples; ++n) {
      for (std::size_t i = 0; i < slots.size(); ++i) tuple[i] = sample_element(domains_[slots[i].domain].algebra, rng);
      if (!evaluate()) return out;
    }
    return out;
  }

 private:
  struct Domain {
    MvAlgebra algebra;
    std::vector<MvElement> elements;
    bool exhaustive;
    bool enumerated;
  };

  Budget budget_;
  std::vector<Domain> domains_;
};

}  // namespace mvlab
