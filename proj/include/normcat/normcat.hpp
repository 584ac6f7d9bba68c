#pragma once

#include "normcat/audit.hpp"
#include "normcat/banach.hpp"
#include "normcat/category.hpp"
#include "normcat/cauchy.hpp"
#include "normcat/errors.hpp"
#include "normcat/extreal.hpp"
#include "normcat/fincat.hpp"
#include "normcat/freecat.hpp"
#include "normcat/metcat.hpp"
#include "normcat/report.hpp"
#include "normcat/sumcat.hpp"
