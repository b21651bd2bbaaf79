#pragma once

#include <string>

#include "bcpp/model.hpp"

namespace bcpp {

// Text strip: one column per cell, ten height bands from top to bottom; a
// band is drawn when the cell's load reaches it (rounded up).
std::string render_ascii(const Instance& instance, const SequencePacking& p);

// One rectangle per bar in a viewBox of (length * D) x D units, so every
// coordinate is an exact integer. Bars in a cell stack in sequence order.
std::string render_svg(const Instance& instance, const SequencePacking& p);

}  // namespace bcpp
