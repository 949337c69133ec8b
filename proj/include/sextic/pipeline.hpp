#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/catalog.hpp"
#include "sextic/coset_enum.hpp"
#include "sextic/presentation.hpp"

namespace sextic {

class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineOptions {
  coset::EnumerationLimits limits;
  /// Cross-check every derived-series level by its own enumeration.
  bool enumerate_levels = false;
};

/// pi as the index-2 kernel of Pi/delta^2 -> C2: enumerate the cosets of
/// the subgroup generated by the other generators and their delta-conjugates,
/// require index 2, and return the simplified Reidemeister-Schreier
/// presentation. Throws PipelineError if the index is not 2 and
/// coset::OverflowError on overflow.
Presentation pi_from_Pi(const Presentation& Pi, std::uint32_t delta,
                        const PipelineOptions& opt = {});

/// The operational characterization of C3 x D10 among groups of order 30.
struct D10xC3Certificate {
  std::optional<std::uint64_t> order;
  std::string abelianization;
  std::string derived_abelianization;
  std::size_t center_order = 0;
  bool nonabelian = false;
  bool d10_quotient = false;

  bool holds() const {
    return order == 30u && abelianization == "C6" && derived_abelianization == "C5" &&
           center_order == 3 && nonabelian && d10_quotient;
  }
  std::string summary() const;
};

D10xC3Certificate d10xc3_certificate(const Presentation& pi, const PipelineOptions& opt = {});

struct ShortcutResult {
  bool established = false;
  /// "permutation images", "assumed commutators" or the reason for refusal.
  std::string basis;
  D10xC3Certificate certificate;
};

/// delta central in Pi/delta^2 implies pi is the G_proj group. Centrality is
/// taken from the entry's assumed commutator relators when present,
/// otherwise tested in the regular permutation representation of Pi/delta^2.
ShortcutResult delta_central_shortcut(const CatalogEntry& entry, const PipelineOptions& opt = {});

struct FamilyReport {
  std::string family;
  Method method = Method::direct;
  std::optional<std::uint64_t> pi_order;
  std::vector<std::string> derived_factors;
  bool d10_quotient = false;
  std::vector<std::string> notes;
  /// Empty on success, otherwise the step that failed.
  std::string failed_step;

  /// Agreement with the catalog's expected result.
  bool matches(const ExpectedResult& e) const;
};

/// pi of `to` is a quotient of pi of `from` (order 30, certified C3 x D10);
/// the only normal subgroup leaving abelianization C6 and a D10 quotient is
/// trivial. Throws PipelineError without the certificate.
FamilyReport perturbation_argument(const std::string& from, const std::string& to,
                                   const PipelineOptions& opt = {});

/// Report of one catalog entry by its method.
FamilyReport family_report(const std::string& name, const PipelineOptions& opt = {});

/// The eight families, then G_affine and G_proj.
std::vector<FamilyReport> run_all(const PipelineOptions& opt = {});

/// Presentation of pi for a family (direct: pi_from_Pi; centrality: G_proj;
/// perturbation: pi of the source, once the argument succeeds).
Presentation pi_presentation(const std::string& name, const PipelineOptions& opt = {});

}  // namespace sextic
