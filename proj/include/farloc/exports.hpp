#ifndef FARLOC_EXPORTS_HPP
#define FARLOC_EXPORTS_HPP

#include <string>
#include <vector>

#include "farloc/locate.hpp"

namespace farloc {

/// Legacy VTK structured-points ASCII file (one SCALARS array, x fastest).
void write_vtk(const std::string& path, const IndicatorField& field,
               const std::string& array_name = "indicator");

/// Read a field written by write_vtk.
IndicatorField read_vtk(const std::string& path);

/// CSV with columns x,y,z,value (header row, mesh order).
void write_indicator_csv(const std::string& path, const IndicatorField& field);

/// CSV with columns x,y,z,value,reference_id (header row).
void write_peaks_csv(const std::string& path, const PeakList& peaks);

} // namespace farloc

#endif
