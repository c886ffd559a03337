#pragma once

#include "signed_spectra/closed_form.hpp"
#include "signed_spectra/dense_matrix.hpp"
#include "signed_spectra/graph.hpp"
#include "signed_spectra/jacobi.hpp"
#include "signed_spectra/oracle.hpp"
#include "signed_spectra/pattern.hpp"
#include "signed_spectra/random.hpp"
#include "signed_spectra/reduction.hpp"
#include "signed_spectra/spectrum.hpp"
#include "signed_spectra/suites.hpp"
