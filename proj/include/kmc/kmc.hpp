#pragma once

#include <kmc/errors.hpp>
#include <kmc/rational.hpp>
#include <kmc/linalg.hpp>
#include <kmc/polynomial.hpp>
#include <kmc/tensor.hpp>
#include <kmc/lie_frame.hpp>
#include <kmc/curvature.hpp>
#include <kmc/contact.hpp>
#include <kmc/pseudosymmetry.hpp>
#include <kmc/kappa_mu.hpp>
#include <kmc/spec_io.hpp>
#include <kmc/report.hpp>
