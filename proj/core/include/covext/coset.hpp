#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "covext/monodromy.hpp"
#include "covext/word.hpp"

namespace covext {

inline constexpr std::size_t kDefaultCosetCap = 1'000'000;

/// Coset representatives and Schreier generators of the stabilizer of a
/// base sheet.
struct SchreierData {
  std::uint32_t base = 0;
  /// representatives[s] maps the base sheet to s; representatives[base] = ε.
  std::vector<Word> representatives;
  std::vector<Word> stabilizer_generators;
};

/// Breadth-first Schreier transversal from `base`; children are explored in
/// generator order, then inverse-generator order. Stabilizer generators are
/// rep_s·g·rep_{ρ(g)(s)}⁻¹ over sheets in discovery order and generators in
/// order, trivial words dropped. Throws NotConnected for intransitive reps.
SchreierData schreier_generators(const MonodromyRep& rep, std::uint32_t base = 0);

enum class TableStatus { Closed, Exceeded };

/// Result of a coset enumeration. When Closed, rows are numbered in the
/// standard breadth-first order (row 0 is the subgroup itself) and columns
/// are g_0, g_0⁻¹, g_1, g_1⁻¹, ...
class CosetTable {
 public:
  CosetTable(Presentation presentation, TableStatus status, std::size_t cap,
             std::vector<std::vector<std::uint32_t>> rows, std::size_t cosets_defined);

  const Presentation& presentation() const noexcept { return presentation_; }
  TableStatus status() const noexcept { return status_; }
  bool closed() const noexcept { return status_ == TableStatus::Closed; }
  std::size_t cap() const noexcept { return cap_; }
  /// Total coset definitions made during enumeration.
  std::size_t cosets_defined() const noexcept { return cosets_defined_; }

  /// Index of the subgroup; meaningful only when Closed.
  std::size_t index() const noexcept { return rows_.size(); }
  std::uint32_t act(std::uint32_t coset, GeneratorId g, int sign = 1) const;
  /// The coset reached from `coset` by reading `w` left to right.
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;
  const std::vector<std::vector<std::uint32_t>>& rows() const noexcept { return rows_; }

 private:
  Presentation presentation_;
  TableStatus status_;
  std::size_t cap_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::size_t cosets_defined_;
};

/// HLT coset enumeration with lookahead. `cap` bounds the number of live
/// cosets; when it cannot be honoured the table is returned Exceeded and
/// carries no rows.
CosetTable todd_coxeter(const Presentation& presentation, const std::vector<Word>& subgroup_generators,
                        std::size_t cap = kDefaultCosetCap);

/// The permutation action of the generators on the cosets of a closed table.
/// Throws Error if the table is not closed.
MonodromyRep coset_action(const CosetTable& table);

/// Debug dump: one row per coset, tab-separated images (0-based) in column order.
void dump_table(std::ostream& os, const CosetTable& table);

}  // namespace covext
