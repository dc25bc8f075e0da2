#pragma once

#include <iosfwd>
#include <string>

#include "rothlab/cyclic.hpp"
#include "rothlab/pipeline.hpp"

namespace rothlab {

// UTF-8 JSON, fixed key order, floating values printed with 17 significant
// digits so parse(serialize(r)) == r bit for bit.
std::string report_to_json(const PipelineReport& report);
PipelineReport report_from_json(const std::string& text);

// Flat key,value lines (timings as timing.<stage>).
std::string report_to_csv(const PipelineReport& report);

// Rows m,re,im,abs with a header line.
void write_spectrum_csv(std::ostream& out, const ComplexCyclicFunction& fhat);

}  // namespace rothlab
