#pragma once

#include "fishburn/bijections.hpp"
#include "fishburn/claims.hpp"
#include "fishburn/dyck.hpp"
#include "fishburn/enumerate.hpp"
#include "fishburn/error.hpp"
#include "fishburn/exact.hpp"
#include "fishburn/intseq.hpp"
#include "fishburn/permutation.hpp"
#include "fishburn/series.hpp"
#include "fishburn/tables.hpp"
