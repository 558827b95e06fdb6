#ifndef DIVMEAS_EMIT_HPP
#define DIVMEAS_EMIT_HPP

#include <string>

namespace divmeas {

// Deterministic number formatting for emitted artifacts: 12 significant
// digits, '.' decimal separator, no locale dependence.
std::string format_number(double v);

// Writes text to path, or to stdout when path is empty; '\n' endings.
void write_artifact(const std::string& path, const std::string& text);

}  // namespace divmeas

#endif
