#pragma once

#include <optional>

namespace glstar {

/// Minimally adequate teacher. Answers must be deterministic and free of
/// side effects so that a single instance can be shared read-only.
template <class Query, class Value, class Machine>
class Teacher {
 public:
  using query_type = Query;
  using value_type = Value;
  using machine_type = Machine;

  virtual ~Teacher() = default;

  virtual Value membership(const Query& w) const = 0;

  /// Nothing if the hypothesis is correct, otherwise a word on which it
  /// disagrees with the target.
  virtual std::optional<Query> equivalence(const Machine& hypothesis) const = 0;
};

}  // namespace glstar
