#pragma once

#include "spectral_indep/bounds.hpp"
#include "spectral_indep/catalog.hpp"
#include "spectral_indep/distance.hpp"
#include "spectral_indep/errors.hpp"
#include "spectral_indep/exact_oracle.hpp"
#include "spectral_indep/graph.hpp"
#include "spectral_indep/graph6.hpp"
#include "spectral_indep/json_io.hpp"
#include "spectral_indep/packing_cert.hpp"
#include "spectral_indep/polynomial.hpp"
#include "spectral_indep/rational.hpp"
#include "spectral_indep/spectra.hpp"
#include "spectral_indep/walks.hpp"
#include "spectral_indep/weight_search.hpp"
