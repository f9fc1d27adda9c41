#ifndef HNR_VERIFIER_HPP
#define HNR_VERIFIER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hnr/algebra.hpp"

namespace hnr {

struct VerificationEntry {
  std::string id;  // family[indices]
  bool ok = true;
  nlohmann::json witness;  // offending difference, null when ok
};

struct VerificationReport {
  std::string suite;
  std::vector<ParameterSet> contexts;
  std::vector<VerificationEntry> entries;

  bool pass() const;
  std::size_t failures() const;
  /// Appends `other`, prefixing its ids with `prefix`.
  void absorb(const VerificationReport& other, const std::string& prefix = "");
};

/// Records one entry per relation instance.
class RelationRecorder {
public:
  explicit RelationRecorder(VerificationReport& report) : report_(report) {}

  void expect_zero(const std::string& id, const Element& difference);
  void expect_equal(const std::string& id, const Element& lhs, const Element& rhs);
  void expect_equal(const std::string& id, const Scalar& lhs, const Scalar& rhs);
  void expect(const std::string& id, bool ok, nlohmann::json witness = nullptr);

private:
  VerificationReport& report_;
};

/// The relations of the defining presentation for parameters `target`,
/// evaluated on candidate images t[0..n-1] and T[0..n-2].
void check_definition_relations(RelationRecorder& rec, const ParameterSet& target, const AlgebraPtr& alg,
                                const std::vector<Element>& t, const std::vector<Element>& T);
/// Generators t_i, g_i with relations (1)-(6) of the Yokonuma-like
/// presentation; e_i is rebuilt from the t_i by interpolation.
void check_yokonuma_relations(RelationRecorder& rec, const ParameterSet& target, const AlgebraPtr& alg,
                              const std::vector<Element>& t, const std::vector<Element>& g);

VerificationReport verify_definition_presentation(const AlgebraPtr& alg);
VerificationReport verify_yokonuma_presentation(const AlgebraPtr& alg);
VerificationReport verify_b_presentation(const AlgebraPtr& alg);
VerificationReport verify_lemma_suite(const AlgebraPtr& alg);
/// The four suites above merged.
VerificationReport verify_all(const AlgebraPtr& alg);

/// Runs verify_all on `trials` seeded random parameter sets.
/// Throws OutOfRange when trials < 1.
VerificationReport multi_parameter_fuzz(int n, int r, int trials, std::uint64_t seed);

nlohmann::json to_json(const VerificationReport& report);
/// One line per relation family with instance and failure counts.
std::string format_table(const VerificationReport& report);

}  // namespace hnr

#endif  // HNR_VERIFIER_HPP
