#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gds/charts.hpp"
#include "gds/derivations.hpp"
#include "gds/dsl.hpp"
#include "gds/mlcomb.hpp"
#include "gds/presentation.hpp"
#include "gds/transform.hpp"
#include "gds/verify.hpp"

namespace gds {

enum class Format { kText, kJson, kLatex, kDot };

/// "text", "json", "latex" or "dot". Throws kInvalidArgument.
Format parse_format(std::string_view name);

// Every emitter is deterministic and ends with a newline. DOT output draws
// the underlying tree; reports without one throw kInvalidArgument for DOT.

std::string emit_tree(const TreeDocument& doc, Format f);
std::string emit_conversion(const TreeDocument& result, const ConversionTrace& trace, Format f);
std::string emit_presentation(const Presentation& p, const std::string& name, Format f);
std::string emit_charts(const TreeDocument& doc, const std::vector<ChartExpansion>& charts, Format f);
std::string emit_fiber(const Presentation& p, const std::string& name, const std::vector<FiberComponent>& comps,
                       Format f);
std::string emit_derivation(const Presentation& p, const std::string& name, const Derivation& d,
                            const std::vector<CheckReport>& checks, Format f);

struct MlReport {
  TreeDocument doc;
  bool trivial = false;
  std::optional<CombNormalForm> normal_form;
  std::vector<Generator> equations;
  std::optional<DanielewskiForm> ordinary;
};
MlReport ml_report(const TreeDocument& doc);
std::string emit_ml(const MlReport& r, Format f);

std::string emit_qhp(const QHPData& d, Format f);
std::string emit_verify(const VerifyReport& r, Format f);

}  // namespace gds
