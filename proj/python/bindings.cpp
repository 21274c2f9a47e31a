#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "corrmetrics/binary.hpp"
#include "corrmetrics/confusion_matrix.hpp"
#include "corrmetrics/crosscheck.hpp"
#include "corrmetrics/emit.hpp"
#include "corrmetrics/enhanced.hpp"
#include "corrmetrics/experiment.hpp"
#include "corrmetrics/generator.hpp"
#include "corrmetrics/multinary.hpp"
#include "corrmetrics/oracle.hpp"

namespace py = pybind11;
using namespace corrmetrics;

namespace {

ConfusionMatrix from_nested(const std::vector<std::vector<Count>>& rows,
                            std::vector<std::string> labels) {
  return ConfusionMatrix::from_rows(rows, std::move(labels));
}

std::vector<std::vector<Count>> to_nested(const ConfusionMatrix& cm) {
  std::vector<std::vector<Count>> rows(cm.classes());
  for (std::size_t r = 0; r < cm.classes(); ++r) {
    for (std::size_t c = 0; c < cm.classes(); ++c) {
      rows[r].push_back(cm(r, c));
    }
  }
  return rows;
}

std::optional<WeightVector> weights_from(const std::optional<std::vector<double>>& w) {
  if (!w) {
    return std::nullopt;
  }
  return WeightVector(*w);
}

Family family_from(const std::string& name) {
  if (auto f = parse_family(name)) {
    return *f;
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

py::dict panel_dict(const MetricPanel& panel) {
  py::dict scores;
  py::list undefined;
  for (const auto& [name, score] : panel.scores) {
    scores[py::str(name)] = score.value;
    if (!score.defined) {
      undefined.append(name);
    }
  }
  py::dict out;
  out["k"] = panel.classes;
  out["n"] = panel.total;
  out["rho"] = panel.rho;
  out["scores"] = scores;
  out["undefined"] = undefined;
  out["warnings"] = panel.warnings;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Correlation-based metrics for multiclass confusion matrices";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    }
  });

  py::class_<Score>(m, "Score")
      .def_readonly("value", &Score::value)
      .def_readonly("defined", &Score::defined)
      .def("__float__", [](const Score& s) { return s.value; })
      .def("__repr__", [](const Score& s) {
        return "Score(" + format_real(s.value) + (s.defined ? ")" : ", undefined)");
      });

  py::class_<ConfusionMatrix>(m, "ConfusionMatrix")
      .def(py::init(&from_nested), py::arg("rows"),
           py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("classes", &ConfusionMatrix::classes)
      .def_property_readonly("total", &ConfusionMatrix::total)
      .def_property_readonly("labels", &ConfusionMatrix::labels)
      .def("__getitem__",
           [](const ConfusionMatrix& cm, std::pair<std::size_t, std::size_t> idx) {
             if (idx.first >= cm.classes() || idx.second >= cm.classes()) {
               throw py::index_error("class index out of range");
             }
             return cm(idx.first, idx.second);
           })
      .def("tolist", &to_nested)
      .def("transposed", &ConfusionMatrix::transposed)
      .def("scaled", &ConfusionMatrix::scaled, py::arg("factor"))
      .def("render", [](const ConfusionMatrix& cm) { return render(cm); })
      .def("__eq__", [](const ConfusionMatrix& a, const ConfusionMatrix& b) { return a == b; })
      .def("__repr__", [](const ConfusionMatrix& cm) {
        return "ConfusionMatrix(" + py::repr(py::cast(to_nested(cm))).cast<std::string>() + ")";
      });

  py::class_<Marginals>(m, "Marginals")
      .def_readonly("alpha", &Marginals::alpha)
      .def_readonly("beta", &Marginals::beta)
      .def_readonly("total", &Marginals::total);

  py::class_<StructureFlags>(m, "StructureFlags")
      .def_readonly("is_diagonal", &StructureFlags::is_diagonal)
      .def_readonly("is_hollow", &StructureFlags::is_hollow)
      .def_readonly("zero_rows", &StructureFlags::zero_rows)
      .def_readonly("zero_cols", &StructureFlags::zero_cols);

  py::class_<BinaryCounts>(m, "BinaryCounts")
      .def(py::init<Count, Count, Count, Count>(), py::arg("tp"), py::arg("fn"),
           py::arg("fp"), py::arg("tn"))
      .def_readonly("tp", &BinaryCounts::tp)
      .def_readonly("fn", &BinaryCounts::fn)
      .def_readonly("fp", &BinaryCounts::fp)
      .def_readonly("tn", &BinaryCounts::tn);

  m.def("parse_confusion_matrix", &parse_confusion_matrix, py::arg("text"));
  m.def("read_confusion_matrix", &read_confusion_matrix, py::arg("path"));
  m.def("marginals", &marginals);
  m.def("structure", &structure);
  m.def("binary_counts", &binary_counts);

  m.def("f1", &f1, py::arg("counts"));
  m.def("accuracy", &accuracy, py::arg("counts"));
  m.def("mcc", &mcc, py::arg("counts"));

  m.def("r_k", &r_k);
  m.def(
      "mpc1",
      [](const ConfusionMatrix& cm, const std::optional<std::vector<double>>& w) {
        const auto weights = weights_from(w);
        return weights ? mpc1(cm, *weights) : mpc1(cm);
      },
      py::arg("cm"), py::arg("weights") = std::nullopt);
  m.def("mpc2", &mpc2);
  m.def("mpc_matrix", [](const ConfusionMatrix& cm) {
    const MpcMatrix mpc = mpc_matrix(cm);
    std::vector<std::vector<std::optional<double>>> rows(cm.classes());
    for (std::size_t k = 0; k < cm.classes(); ++k) {
      for (std::size_t l = 0; l < cm.classes(); ++l) {
        rows[k].push_back(mpc.at(k, l));
      }
    }
    return rows;
  });
  m.def("accuracy_rescaled", &accuracy_rescaled);

  m.def("er_k", &er_k);
  m.def(
      "empc1",
      [](const ConfusionMatrix& cm, const std::optional<std::vector<double>>& w) {
        const auto weights = weights_from(w);
        return weights ? empc1(cm, *weights) : empc1(cm);
      },
      py::arg("cm"), py::arg("weights") = std::nullopt);
  m.def("empc2", &empc2);
  m.def("emcc", &emcc);
  m.def(
      "delta_k",
      [](const ConfusionMatrix& cm, std::size_t k, double rho) {
        const PerClassTerm t = delta_k(cm, k, RhoParameter(rho));
        return Score{t.delta, t.defined};
      },
      py::arg("cm"), py::arg("k"), py::arg("rho") = RhoParameter::kDefault);
  m.def(
      "empc1_rho",
      [](const ConfusionMatrix& cm, double rho) { return empc1_rho(cm, RhoParameter(rho)); },
      py::arg("cm"), py::arg("rho") = RhoParameter::kDefault);
  m.def(
      "er_k_rho",
      [](const ConfusionMatrix& cm, double rho) { return er_k_rho(cm, RhoParameter(rho)); },
      py::arg("cm"), py::arg("rho") = RhoParameter::kDefault);
  m.def(
      "empc2_rho",
      [](const ConfusionMatrix& cm, double rho) { return empc2_rho(cm, RhoParameter(rho)); },
      py::arg("cm"), py::arg("rho") = RhoParameter::kDefault);

  m.def(
      "score_matrix",
      [](const ConfusionMatrix& cm, double rho,
         const std::optional<std::vector<double>>& w) {
        return panel_dict(score_matrix(cm, RhoParameter(rho), weights_from(w)));
      },
      py::arg("cm"), py::arg("rho") = RhoParameter::kDefault,
      py::arg("weights") = std::nullopt);

  m.def("families", [] {
    std::vector<std::string> names;
    for (Family f : kAllFamilies) {
      names.emplace_back(family_name(f));
    }
    return names;
  });
  m.def(
      "generate",
      [](const std::string& family, std::size_t k, Count n, std::uint64_t replicate,
         std::uint64_t seed) {
        return generate(FamilySpec{family_from(family), k, n}, replicate, seed);
      },
      py::arg("family"), py::arg("k") = 5, py::arg("n") = 1000,
      py::arg("replicate") = 0, py::arg("seed") = 0);
  m.def(
      "simulate",
      [](const std::vector<std::string>& families, std::size_t k, Count n,
         std::uint64_t reps, std::uint64_t seed, double rho, std::size_t bins,
         std::size_t workers, const std::string& format) {
        if (format != "json" && format != "csv") {
          throw std::invalid_argument("format must be 'json' or 'csv'");
        }
        ExperimentConfig config;
        for (const auto& name : families) {
          config.families.push_back({family_from(name), k, n});
        }
        config.replicates = reps;
        config.master_seed = seed;
        config.rho = RhoParameter(rho);
        config.histogram_bins = bins;
        config.workers = workers;
        std::vector<MetricHistogram> histograms;
        {
          py::gil_scoped_release release;
          histograms = run_experiment(config);
        }
        return emit(histograms, config,
                    format == "json" ? OutputFormat::Json : OutputFormat::Csv);
      },
      py::arg("families"), py::arg("k") = 5, py::arg("n") = 1000,
      py::arg("reps") = 1000, py::arg("seed") = 0,
      py::arg("rho") = RhoParameter::kDefault, py::arg("bins") = 40,
      py::arg("workers") = 1, py::arg("format") = "json");

  auto orc = m.def_submodule("oracle", "Sequence-level reference evaluations");
  orc.def("pcc", [](const std::vector<double>& x, const std::vector<double>& y) {
    return oracle::pcc(x, y);
  });
  orc.def("affine_relabel", [](const std::vector<double>& x, double a, double b) {
    return oracle::affine_relabel(x, a, b);
  });
  orc.def("build_sequences", [](const ConfusionMatrix& cm) {
    const auto seqs = oracle::build_sequences(cm);
    std::vector<std::vector<int>> t;
    std::vector<std::vector<int>> c;
    for (std::size_t k = 0; k < seqs.classes(); ++k) {
      t.emplace_back(seqs.t(k).begin(), seqs.t(k).end());
      c.emplace_back(seqs.c(k).begin(), seqs.c(k).end());
    }
    return py::make_tuple(t, c);
  });
  orc.def("r_k", [](const ConfusionMatrix& cm) {
    return oracle::r_k_from_sequences(oracle::build_sequences(cm));
  });
  orc.def("mpc1", [](const ConfusionMatrix& cm) {
    return oracle::mpc1_from_sequences(oracle::build_sequences(cm));
  });
  orc.def("mpc2", [](const ConfusionMatrix& cm) {
    return oracle::mpc2_from_sequences(oracle::build_sequences(cm));
  });
  orc.def("emcc", [](const ConfusionMatrix& cm) {
    return oracle::emcc_correlation_form(oracle::build_sequences(cm));
  });
  orc.def("reduced_pcc", &oracle::reduced_pcc, py::arg("cm"), py::arg("k"),
          py::arg("rho"));
  orc.def(
      "cross_check",
      [](std::uint64_t trials, std::uint64_t seed, double tol) {
        CrossCheckReport report;
        {
          py::gil_scoped_release release;
          report = run_cross_check(trials, seed, tol);
        }
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["name"] = c.name;
          d["compared"] = c.compared;
          d["mismatches"] = c.mismatches;
          d["max_abs_diff"] = c.max_abs_diff;
          checks.append(d);
        }
        py::dict out;
        out["passed"] = report.passed();
        out["checks"] = checks;
        return out;
      },
      py::arg("trials") = 100, py::arg("seed") = 0, py::arg("tol") = 1e-10);
}
