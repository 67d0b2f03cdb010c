#pragma once

#include "glstar/domain_bool.hpp"
#include "glstar/domain_jsl.hpp"
#include "glstar/domain_sorted.hpp"
#include "glstar/domain_weighted.hpp"
#include "glstar/errors.hpp"
#include "glstar/learner.hpp"
#include "glstar/moore.hpp"
#include "glstar/presentations.hpp"
#include "glstar/rational.hpp"
#include "glstar/rfsa.hpp"
#include "glstar/sorted.hpp"
#include "glstar/syntactic.hpp"
#include "glstar/table.hpp"
#include "glstar/targets.hpp"
#include "glstar/teacher.hpp"
#include "glstar/teachers.hpp"
#include "glstar/weighted.hpp"
#include "glstar/word.hpp"
