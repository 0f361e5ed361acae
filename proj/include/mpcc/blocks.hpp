// Copyright 2026 The mpcc Authors
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

#ifndef MPCC_BLOCKS_HPP
#define MPCC_BLOCKS_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpcc/expr.hpp"

namespace mpcc {

enum class Namespace : char { Basic = 'B', Complex = 'C', Whole = 'E' };

/// A normalized block signature. The model keys it as "<ns>:<text>".
struct BlockSignature {
  Namespace ns = Namespace::Basic;
  std::string text;

  std::string key() const;
  auto operator<=>(const BlockSignature &) const = default;
};

/// Parses "B:...", "C:..." or "E:..."; nullopt for anything else.
std::optional<BlockSignature> parse_signature_key(std::string_view key);

/// The &&/|| skeleton of a predicate. Leaves index basic blocks; And/Or
/// nodes are n-ary with consecutive same-operator nodes flattened. A
/// Context node is a non-logical operator with a logical operand somewhere
/// below it (`!(a && b)`, `x == (a || b)`): `shell` holds that node without
/// its children, and there is one child connective per operand.
struct Connective {
  enum class Kind { Leaf, And, Or, Context };

  Kind kind = Kind::Leaf;
  std::size_t block = 0;
  std::vector<Connective> children;
  std::optional<Expr> shell;

  bool operator==(const Connective &) const = default;
};

struct BasicBlock {
  Expr subtree;
  std::vector<std::string> identifiers;
  BlockSignature signature;
};

struct ComplexBlock {
  std::vector<std::size_t> members;  // indices into the owning block list
  Connective connective_shape;       // leaves keep their original indices
  std::vector<std::string> shared_identifiers;  // sorted
  BlockSignature signature;
};

struct BlockSplit {
  std::vector<BasicBlock> blocks;
  Connective connective;
};

/// Identifier leaf names in first-occurrence order, duplicates removed.
/// `this` is not a variable and is left out.
std::vector<std::string> identifiers_of(const Expr &expr);

BlockSplit split_basic_blocks(const Expr &expr);

/// Rebuilds a predicate from its blocks (left-associated && / ||).
Expr reassemble(const Connective &connective, const std::vector<BasicBlock> &blocks);

/// Evaluates the connective with `outcome[i]` (0 or 1) as the value of
/// block i, using C integer semantics for Context operators. Throws
/// std::domain_error for a context with no integer meaning (calls,
/// member access, casts, assignment) or a division by zero.
bool evaluate(const Connective &connective, const std::vector<bool> &outcome);

/// Restricts a connective to the leaves in `keep` (sorted indices). Nodes
/// left with one child collapse into it.
std::optional<Connective> restrict_connective(const Connective &connective,
                                              const std::vector<std::size_t> &keep);

/// Canonical signature text for one normalization unit.
///
/// Identifiers become placeholders V0, V1, ...; literals collapse to
/// classes (0, 1, N, F, S, K, NULL, true/false); `a > b` becomes `b < a`
/// and `a >= b` becomes `b <= a`; operands of == != + * & | ^ and of
/// flattened && / || chains are sorted. Callee and field names are kept.
/// Placeholders are numbered by first occurrence in the final text, so
/// normalizing the canonical parse of a signature returns it unchanged.
/// Operands that differ only in placeholder numbers are tried in every
/// order and the smallest text wins, so the result does not depend on the
/// input's operand order. Past 5040 such orderings the order given by
/// `unit_identifiers` is used instead.
std::string normalize(const Expr &expr, const std::vector<std::string> &unit_identifiers);

/// Convenience overload using identifiers_of(expr) as the unit.
std::string normalize(const Expr &expr);

std::vector<ComplexBlock> build_complex_blocks(const std::vector<BasicBlock> &blocks,
                                               const Connective &connective);

/// Complete block decomposition of one predicate.
struct Decomposition {
  BlockSplit split;
  std::vector<ComplexBlock> complex;
  BlockSignature whole;

  /// Indices of blocks not covered by any complex block.
  std::vector<std::size_t> isolated_blocks() const;
};

Decomposition decompose(const Expr &expr);

/// Every signature with multiplicity: each basic block's B signature (one
/// per occurrence), each complex block's C signature, and the E signature.
std::vector<BlockSignature> signature_occurrences(const Decomposition &d);

/// Distinct signatures of a predicate, sorted by key.
std::vector<BlockSignature> signature_set(const Expr &expr);

}  // namespace mpcc

#endif  // MPCC_BLOCKS_HPP
