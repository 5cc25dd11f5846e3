// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "tmat/element_set.hpp"
#include "tmat/ground_set.hpp"
#include "tmat/presentation.hpp"

namespace tmat {

// M[A]: the transversal matroid whose independent sets are the partial
// transversals of a presentation. Immutable.
class TransversalMatroid {
 public:
  TransversalMatroid() = default;
  explicit TransversalMatroid(Presentation presentation);

  const Presentation& presentation() const { return presentation_; }
  const GroundSet& ground() const { return presentation_.ground(); }
  int full_rank() const { return full_rank_; }

  // Throws DomainError if x leaves the ground set.
  int rank(ElementSet x) const;

 private:
  Presentation presentation_;
  int full_rank_ = 0;
};

// M\D/C over a transversal base. The minor's ground set is the base ground
// set minus D and C, keeping declaration order; subsets passed to rank() are
// expressed in the minor's own positions.
class MinorMatroid {
 public:
  // Throws PreconditionError if D and C intersect, DomainError if either
  // leaves the base ground set.
  MinorMatroid(TransversalMatroid base, ElementSet deleted,
               ElementSet contracted);

  static MinorMatroid contraction(const TransversalMatroid& base,
                                  std::string_view element);
  static MinorMatroid deletion(const TransversalMatroid& base,
                               std::string_view element);

  const TransversalMatroid& base() const { return base_; }
  ElementSet deleted() const { return deleted_; }
  ElementSet contracted() const { return contracted_; }
  const GroundSet& ground() const { return ground_; }

  // Minor positions -> base positions.
  ElementSet lift(ElementSet x) const;

  // r(X) = r_base(X u C) - r_base(C).
  int rank(ElementSet x) const;

 private:
  TransversalMatroid base_;
  ElementSet deleted_;
  ElementSet contracted_;
  GroundSet ground_;
  std::vector<std::size_t> base_position_;
  int contracted_rank_ = 0;
};

}  // namespace tmat
