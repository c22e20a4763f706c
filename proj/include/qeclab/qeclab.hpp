#pragma once

#include "qeclab/eigen.hpp"
#include "qeclab/graphs.hpp"
#include "qeclab/linalg.hpp"
#include "qeclab/matrices.hpp"
#include "qeclab/matrix.hpp"
#include "qeclab/polynomials.hpp"
#include "qeclab/qec.hpp"
#include "qeclab/random.hpp"
#include "qeclab/rational.hpp"
#include "qeclab/region.hpp"
#include "qeclab/report.hpp"
#include "qeclab/roots.hpp"
#include "qeclab/verify.hpp"
