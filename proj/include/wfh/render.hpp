#pragma once

#include <string>

#include "json.hpp"
#include "wfh/mbss.hpp"
#include "wfh/models.hpp"
#include "wfh/verdict.hpp"

namespace wfh {

using ordered_json = nlohmann::ordered_json;

/* {"degree": dim}, degrees ascending. */
ordered_json graded_to_json(const GradedDims& g);

ordered_json page_to_json(const SpectralPage& page);

/* {"columns": [...], "wfh": {...}, "filtered": [["c", lower, upper]...],
 *  "slope_per_pi": "p/q"} */
ordered_json wfh_document(const SpectralPage& page, const WfhReport& report);

ordered_json system_to_json(const ChordSystem& system, const MorseBottReport& validity);
ordered_json verdict_to_json(const std::string& model, const Verdict& verdict);

/* Dot grid in the style of a spectral sequence chart: columns horizontal,
 * total degree vertical. '*' survives, '?' undetermined, digits mark
 * multiplicity. */
std::string render_page_ascii(const SpectralPage& page);

/* Static figure: one circle per generator, filled when it survives. */
std::string render_page_svg(const SpectralPage& page);

}  // namespace wfh
