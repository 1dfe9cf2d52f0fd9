#pragma once

#include "bounds.hpp"
#include "canonical.hpp"
#include "certificate.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "extremal.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "lemma.hpp"
#include "lemma_types.hpp"
#include "parallel.hpp"
#include "search.hpp"
#include "spectral.hpp"
#include "sweep.hpp"
#include "verify.hpp"
