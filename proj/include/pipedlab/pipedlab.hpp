#pragma once

#include "pipedlab/classify.hpp"
#include "pipedlab/corpus.hpp"
#include "pipedlab/exact.hpp"
#include "pipedlab/family.hpp"
#include "pipedlab/geometry.hpp"
#include "pipedlab/param.hpp"
#include "pipedlab/polygon.hpp"
#include "pipedlab/search.hpp"
#include "pipedlab/signature.hpp"
