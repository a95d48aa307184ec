#include "divlab/catalog.hpp"

#include "divlab/measures_hard.hpp"
#include "divlab/io.hpp"
#include "divlab/measures_poly.hpp"

namespace divlab {

MeasureValue MeasureHandle::operator()(const DistanceMatrix& d) const {
  if (kind != MeasureKind::distance_based) {
    throw Error(Errc::invalid_order,
                name + " is similarity-based; convert the input through an explicit kernel");
  }
  return distance_eval(d);
}

MeasureValue MeasureHandle::operator()(const SimilarityMatrix& s) const {
  if (kind != MeasureKind::similarity_based) {
    throw Error(Errc::invalid_order, name + " is distance-based and cannot take a similarity matrix");
  }
  return similarity_eval(s);
}

MeasureHandle make_measure(const std::string& name, const MeasureParams& params) {
  MeasureHandle h;
  h.name = name;
  if (name == "average") {
    h.display = "Average";
    h.distance_eval = [](const DistanceMatrix& d) { return average(d); };
  } else if (name == "sum_average") {
    h.display = "SumAverage";
    h.distance_eval = [](const DistanceMatrix& d) { return sum_average(d); };
  } else if (name == "diameter") {
    h.display = "Diameter";
    h.distance_eval = [](const DistanceMatrix& d) { return diameter(d); };
  } else if (name == "sum_diameter") {
    h.display = "SumDiameter";
    h.distance_eval = [](const DistanceMatrix& d) { return sum_diameter(d); };
  } else if (name == "bottleneck") {
    h.display = "Bottleneck";
    h.distance_eval = [](const DistanceMatrix& d) { return bottleneck(d); };
  } else if (name == "sum_bottleneck") {
    h.display = "SumBottleneck";
    h.distance_eval = [](const DistanceMatrix& d) { return sum_bottleneck(d); };
  } else if (name == "energy") {
    h.display = "Energy(" + format_double(params.gamma) + ")";
    h.params["gamma"] = params.gamma;
    const EnergyExponent g(params.gamma);
    h.distance_eval = [g](const DistanceMatrix& d) { return energy(d, g); };
  } else if (name == "circles") {
    h.display = "#Circles(" + format_double(params.t) + ")";
    h.params["t"] = params.t;
    const double t = params.t;
    h.distance_eval = [t](const DistanceMatrix& d) { return circles(d, t); };
  } else if (name == "unique") {
    h.display = "Unique";
    h.min_n = 1;
    h.distance_eval = [](const DistanceMatrix& d) { return unique_fraction(d); };
  } else if (name == "ham_div") {
    h.display = "HamDiv";
    h.min_n = 3;
    h.distance_eval = [](const DistanceMatrix& d) { return ham_div(d); };
  } else if (name == "vendi") {
    h.display = "Vendi Score";
    h.kind = MeasureKind::similarity_based;
    h.similarity_eval = [](const SimilarityMatrix& s) { return vendi_score(s); };
  } else if (name == "dpp") {
    h.display = "DPP";
    h.kind = MeasureKind::similarity_based;
    h.similarity_eval = [](const SimilarityMatrix& s) { return dpp_det(s); };
  } else if (name == "rke") {
    h.display = "RKE";
    h.kind = MeasureKind::similarity_based;
    h.similarity_eval = [](const SimilarityMatrix& s) { return rke(s); };
  } else if (name == "species") {
    h.display = "Species(" + format_double(params.q) + ")";
    h.kind = MeasureKind::similarity_based;
    h.params["q"] = params.q;
    const SpeciesOrder order(params.q);
    h.similarity_eval = [order](const SimilarityMatrix& s) { return species(s, order); };
  } else if (name == "multi_dim_volume") {
    h.display = "MultiDimVolume";
    h.distance_eval = [](const DistanceMatrix& d) { return multi_dim_volume(d); };
  } else if (name == "multi_dim_volume_normalized") {
    h.display = "MultiDimVolumeNorm";
    h.distance_eval = [](const DistanceMatrix& d) { return multi_dim_volume_normalized(d); };
  } else if (name == "integral_max_clique") {
    h.display = "IntegralMaxClique";
    h.distance_eval = [](const DistanceMatrix& d) { return integral_max_clique(d); };
  } else if (name == "unique_plus_bounded") {
    h.display = "Unique+Bounded";
    h.distance_eval = [](const DistanceMatrix& d) { return unique_plus_bounded(d); };
  } else {
    throw Error(Errc::unknown_case, "unknown measure: " + name);
  }
  return h;
}

std::vector<std::string> catalog_names() {
  return {"average",          "sum_average",
          "diameter",         "sum_diameter",
          "bottleneck",       "sum_bottleneck",
          "energy",           "circles",
          "unique",           "ham_div",
          "vendi",            "dpp",
          "rke",              "species",
          "multi_dim_volume", "integral_max_clique",
          "multi_dim_volume_normalized", "unique_plus_bounded"};
}

std::vector<MeasureHandle> catalogued_measures() {
  std::vector<MeasureHandle> out;
  for (const char* name :
       {"average", "sum_average", "diameter", "sum_diameter", "bottleneck", "sum_bottleneck",
        "energy", "circles", "unique", "ham_div", "vendi", "dpp", "rke", "species",
        "multi_dim_volume", "integral_max_clique"}) {
    out.push_back(make_measure(name));
  }
  return out;
}

}  // namespace divlab
