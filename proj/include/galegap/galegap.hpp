#pragma once

// Umbrella header.

#include "galegap/excone.hpp"
#include "galegap/gale.hpp"
#include "galegap/io.hpp"
#include "galegap/lp_oracle.hpp"
#include "galegap/numeric.hpp"
#include "galegap/tailseq.hpp"
#include "galegap/vsw.hpp"
