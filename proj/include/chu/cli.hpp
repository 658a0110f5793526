#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chu/dlc.hpp"

namespace chu {

// A parsed artifact file. Exactly one payload is engaged, matching kind.
// Files are line-oriented `key: value` text; nested objects either sit
// inline under dotted keys or point to another file by relative path.
struct Document {
  std::string kind;
  std::optional<ChuSpace> space;
  std::optional<ChuTransform> transform;
  std::optional<FunctorDescriptor> functor;
  std::optional<Dialgebra> dialgebra;
  std::optional<DialgebraHom> hom;
  std::optional<ZeroCell> zerocell;
  std::optional<HorizontalCell> hcell;
  std::optional<VerticalCell> vcell;
  std::optional<Cubicle> cubicle;
  friend bool operator==(const Document&, const Document&) = default;
};

Document make_document(ChuSpace s);
Document make_document(ChuTransform t);
Document make_document(FunctorDescriptor f);
Document make_document(Dialgebra d);
Document make_document(DialgebraHom h);
Document make_document(ZeroCell z);
Document make_document(HorizontalCell h);
Document make_document(VerticalCell v);
Document make_document(Cubicle c);

Document parse(const std::string& path);
// base_dir anchors relative paths referenced inside the text.
Document parse_text(const std::string& text, const std::string& base_dir);
std::string print(const Document& d);

// Re-runs the validating constructor for the document's kind; parsing alone
// never checks semantic laws such as adjointness.
void validate(const Document& d);

// Dispatches one command line (without the program name) and writes the
// report to out. Returns the exit code: 0 success, 1 property violation,
// 2 input error, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Theorem suites, one per acceptance area, in fixed order.
const std::vector<std::string>& suite_names();
bool run_suite(const std::string& name, unsigned seed, const Budget& bud,
               std::ostream& out);

}  // namespace chu
