#pragma once

// Command implementations shared by the CLI, the acceptance suite and the
// Python module. Each command returns a Report whose text rendering is a
// pure function of the registry and the arguments.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "precrossed/homology.hpp"
#include "precrossed/registry.hpp"

namespace precrossed {

enum class Verdict { Agree, Disagree, NotApplicable };

std::string_view to_string(Verdict v);

struct Report {
  /// Canonical echo of the command and every parameter it used.
  std::string command;
  std::vector<std::string> lines;
  std::vector<std::string> machine;
  std::vector<std::string> warnings;
  Verdict verdict = Verdict::NotApplicable;

  /// Homology per pipeline tag, in insertion order.
  std::vector<std::pair<std::string, std::vector<HomologyGroup>>> tables;
  /// Named yes/no facts established by the run.
  std::map<std::string, bool> checks;
  /// Wall-clock seconds; kept out of the rendered text.
  double seconds = 0;

  const std::vector<HomologyGroup>& table(std::string_view tag) const;
  std::string render(bool machine_only = false) const;
  /// 0 unless the verdict is DISAGREE (2).
  int exit_code() const { return verdict == Verdict::Disagree ? 2 : 0; }
};

/// `envelope`, `clauwens`, `rackcomplex`, `coskeleton` or `nerve`.
enum class Pipeline { Envelope, Clauwens, RackComplex, Coskeleton, Nerve };

Pipeline parse_pipeline(std::string_view text);
std::string_view to_string(Pipeline p);

/// Homology of one object through one pipeline, H_0..H_{m_max}.
std::vector<HomologyGroup> run_pipeline(const RegistryObject& object, Pipeline pipeline, int m_max, int max_length,
                                        const Coefficients& coeff, const MatrixCaps& caps = {},
                                        std::string* tag = nullptr, std::vector<std::size_t>* cells = nullptr);

/// Accepts `L1..L2` ranges and `L1,L2,..` lists.
std::vector<int> parse_lengths(std::string_view text);

Report cmd_validate(const Registry& registry, std::string_view input);
Report cmd_homology(const Registry& registry, std::string_view input, const std::string& object, Pipeline pipeline,
                    int m_max, int max_length, const Coefficients& coeff, const MatrixCaps& caps = {});
Report cmd_compare_ra(const Registry& registry, std::string_view input, const std::string& object, int m_max,
                      int max_length, const MatrixCaps& caps = {});
Report cmd_check_tri(const Registry& registry, std::string_view input, const std::string& object, int m_max,
                     const Coefficients& coeff, const std::vector<int>& lengths, const MatrixCaps& caps = {});
/// Uses truncation L = m_max + 1 for the envelope side of the induced maps.
Report cmd_check_coskeleton(const Registry& registry, std::string_view input, const std::string& object, int m_max,
                            const MatrixCaps& caps = {});
Report cmd_sweep(const Registry& registry, std::string_view input, const std::string& object, Pipeline pipeline,
                 int m, const std::vector<int>& lengths, const Coefficients& coeff = Coefficients::integers(),
                 const MatrixCaps& caps = {});

/// True when the induced homomorphism is bijective.
bool is_isomorphism(const InducedMap& f);

}  // namespace precrossed
