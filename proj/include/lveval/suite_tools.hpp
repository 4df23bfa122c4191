#pragma once

#include <map>
#include <string>
#include <vector>

#include "lveval/providers.hpp"
#include "lveval/types.hpp"

namespace lveval {

// Suite-side LLM pipelines: everything that augments prompt records before an
// evaluation run.

// Three 1-10 complexity scores judged from the prompt text; the average is
// computed locally.
ComplexityScore score_prompt_complexity(const std::string& prompt, ProviderHub& hub,
                                        const std::string& context = "");

// {subject, action} pairs for every human action in the prompt; empty when
// none is present.
std::vector<ActionSpec> extract_human_actions(const std::string& prompt, ProviderHub& hub,
                                              const std::string& context = "");

// questions_per_dimension closed-ended questions for each of the seven
// dimensions (polarity not yet assigned). A duplicate text within a dimension
// triggers one regeneration; a repeat offender is accepted (and counted in
// accepted_duplicates when given).
std::vector<HerdQuestion> generate_herd_questions(
    const std::map<HerdDimension, std::string>& dimension_evaluations, ProviderHub& hub,
    int questions_per_dimension = 6, const std::string& context = "",
    int* accepted_duplicates = nullptr);

Polarity annotate_polarity(const std::string& question, ProviderHub& hub,
                           const std::string& context = "");

// One generation sub-prompt per event, order preserved.
std::vector<std::string> split_event_prompts(const std::string& prompt,
                                             const std::vector<EventSpec>& events,
                                             ProviderHub& hub, const std::string& context = "");

// Thin generate -> critique -> revise loop for drafting prompt text from a
// seed description. Outputs are drafts for human review, not validated data.
std::string self_refine_prompt(const std::string& seed_text, ProviderHub& hub, int iterations = 2,
                               const std::string& context = "");

}  // namespace lveval
