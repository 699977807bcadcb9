#pragma once

#include "eccspectra/analysis.hpp"
#include "eccspectra/assoc_tree.hpp"
#include "eccspectra/blocks.hpp"
#include "eccspectra/check.hpp"
#include "eccspectra/ecc_matrix.hpp"
#include "eccspectra/error.hpp"
#include "eccspectra/generate.hpp"
#include "eccspectra/graph.hpp"
#include "eccspectra/matrix.hpp"
#include "eccspectra/oracle.hpp"
#include "eccspectra/spectral.hpp"
#include "eccspectra/theorem.hpp"
#include "eccspectra/verify.hpp"
