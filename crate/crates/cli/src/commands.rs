use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use travel_core::{
    cross_validate, enumerate_systems, parse_graph, parse_system, parse_table, phi, psi,
    AxiomReport, EnumerationOptions, Error as CoreError, Filter, Graph, OpTable, TPartitionSystem,
};

use crate::args::{Command, Direction, GlobalOptions};
use crate::report::{EnumerationDetails, Outcome, RunReport};

/// A run that could not get as far as checking anything.
#[derive(Debug)]
pub struct InputError(pub String);

type Run<T> = Result<T, InputError>;

fn read(path: &Path) -> Run<String> {
    fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, CoreError>) -> Run<T> {
    let text = read(path)?;
    parse(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn same_size(left: usize, graph: &Graph, graph_path: &Path) -> Run<()> {
    if left == graph.vertex_count() {
        Ok(())
    } else {
        Err(InputError(format!(
            "{}: graph has {} vertices, input has {left}",
            graph_path.display(),
            graph.vertex_count()
        )))
    }
}

fn write(path: &Path, contents: &str) -> Run<()> {
    fs::write(path, contents).map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))
}

pub fn inputs(command: &Command) -> Vec<String> {
    let paths: Vec<&Path> = match command {
        Command::CheckGroupoid { table, graph } => {
            std::iter::once(table.as_path()).chain(graph.as_deref()).collect()
        }
        Command::CheckTps { system, graph } => vec![system, graph],
        Command::Convert { input, graph, .. } => vec![input, graph],
        Command::Enumerate { graph, .. } | Command::Oracle { graph, .. } => vec![graph],
    };
    paths.iter().map(|p| p.display().to_string()).collect()
}

pub fn execute(command: &Command, global: &GlobalOptions) -> RunReport {
    let mut report = RunReport::new(command.name(), inputs(command));
    let result = match command {
        Command::CheckGroupoid { table, graph } => {
            check_groupoid(&mut report, global, table, graph.as_deref())
        }
        Command::CheckTps { system, graph } => check_tps(&mut report, global, system, graph),
        Command::Convert { direction, input, graph, output } => {
            convert(&mut report, global, *direction, input, graph, output)
        }
        Command::Enumerate { graph, filter, count_only, out, jobs } => {
            let options =
                EnumerationOptions { filter: Filter::from(*filter), count_only: *count_only, jobs: *jobs };
            enumerate(&mut report, graph, options, out.as_deref())
        }
        Command::Oracle { graph, oracle_limit } => oracle(&mut report, graph, *oracle_limit),
    };
    match result {
        Ok(()) => report,
        Err(InputError(message)) => RunReport::error(report.command, report.inputs, message),
    }
}

/// "smooth, not simple" and the like, strongest positive classes first.
fn classification(simple: bool, smooth: bool, semismooth: bool) -> String {
    let mut parts = Vec::new();
    if simple {
        parts.push("simple");
    }
    if smooth {
        parts.push("smooth");
    } else if semismooth {
        parts.push("semi-smooth");
    }
    if !simple {
        parts.push("not simple");
    }
    if !smooth && semismooth {
        parts.push("not smooth");
    }
    if !semismooth {
        parts.push("not semi-smooth");
    }
    parts.join(", ")
}

fn all_hold(reports: &[AxiomReport]) -> bool {
    reports.iter().all(|r| r.holds)
}

fn check_groupoid(
    report: &mut RunReport,
    global: &GlobalOptions,
    table_path: &Path,
    graph_path: Option<&Path>,
) -> Run<()> {
    let table = load(table_path, parse_table)?;
    let limit = global.witness_limit;
    let graph = match graph_path {
        Some(path) => {
            let g = load(path, parse_graph)?;
            same_size(table.vertex_count(), &g, path)?;
            Some(g)
        }
        None => None,
    };
    report.axioms = vec![
        table.check_t1(limit),
        table.check_t2(limit),
        table.check_simple(limit),
        table.check_smooth(limit),
        table.check_semismooth(limit),
    ];
    report.on_graph = match &graph {
        Some(g) => Some(table.is_on_graph(g).map_err(|e| InputError(e.to_string()))?),
        None => None,
    };
    let travel = report.axioms[0].holds && report.axioms[1].holds;
    report.classification = Some(if travel {
        classification(report.axioms[2].holds, report.axioms[3].holds, report.axioms[4].holds)
    } else {
        "not a travel groupoid".to_string()
    });
    report.outcome =
        if travel && report.on_graph != Some(false) { Outcome::Pass } else { Outcome::Fail };
    if global.as_routing {
        report.set_routing(&table);
    }
    Ok(())
}

fn check_tps(report: &mut RunReport, global: &GlobalOptions, system_path: &Path, graph_path: &Path) -> Run<()> {
    let system = load(system_path, parse_system)?;
    let graph = load(graph_path, parse_graph)?;
    same_size(system.vertex_count(), &graph, graph_path)?;
    let limit = global.witness_limit;
    let definition = system.check_definition(&graph, limit).map_err(|e| InputError(e.to_string()))?;
    let valid = all_hold(&definition);
    let classes = system.check_classes(limit);
    report.classification = Some(if valid {
        classification(classes[0].holds, classes[1].holds, classes[2].holds)
    } else {
        "not a T-partition system".to_string()
    });
    report.axioms = definition;
    report.axioms.extend(classes);
    report.outcome = if valid { Outcome::Pass } else { Outcome::Fail };
    if valid && global.as_routing {
        let table = system.associated_groupoid(&graph).map_err(|e| InputError(e.to_string()))?;
        report.set_routing(&table);
    }
    Ok(())
}

fn convert(
    report: &mut RunReport,
    global: &GlobalOptions,
    direction: Direction,
    input: &Path,
    graph_path: &Path,
    output: &Path,
) -> Run<()> {
    let graph = load(graph_path, parse_graph)?;
    let limit = global.witness_limit;
    let table = match direction {
        Direction::ToTps => {
            let table = load(input, parse_table)?;
            same_size(table.vertex_count(), &graph, graph_path)?;
            match psi(&table, &graph) {
                Ok(validated) => {
                    write(output, &validated.system().to_string())?;
                    Some(table)
                }
                Err(CoreError::AxiomFailed(_)) => {
                    report.axioms = vec![table.check_t1(limit), table.check_t2(limit)];
                    None
                }
                Err(CoreError::NotOnGraph) => {
                    report.on_graph = Some(false);
                    None
                }
                Err(e) => return Err(InputError(e.to_string())),
            }
        }
        Direction::ToGroupoid => {
            let system: TPartitionSystem = load(input, parse_system)?;
            same_size(system.vertex_count(), &graph, graph_path)?;
            let definition = system.check_definition(&graph, limit).map_err(|e| InputError(e.to_string()))?;
            if all_hold(&definition) {
                let validated = system.validate(&graph).map_err(|e| InputError(e.to_string()))?;
                let table: OpTable = phi(&validated);
                write(output, &table.to_string())?;
                Some(table)
            } else {
                report.axioms = definition;
                None
            }
        }
    };
    match table {
        Some(table) => {
            report.output = Some(output.display().to_string());
            if global.as_routing {
                report.set_routing(&table);
            }
        }
        None => {
            report.outcome = Outcome::Fail;
            let mut failed: Vec<&str> =
                report.axioms.iter().filter(|r| !r.holds).map(|r| r.axiom.name()).collect();
            if report.on_graph == Some(false) {
                failed.push("on-graph");
            }
            report.message = Some(format!("input does not validate: {} failed", failed.join(", ")));
        }
    }
    Ok(())
}

fn enumerate(
    report: &mut RunReport,
    graph_path: &Path,
    options: EnumerationOptions,
    out: Option<&Path>,
) -> Run<()> {
    let graph = load(graph_path, parse_graph)?;
    let options = EnumerationOptions { count_only: options.count_only && out.is_none(), ..options };
    let result = enumerate_systems(&graph, options);
    if let (Some(path), Some(items)) = (out, &result.items) {
        let file = fs::File::create(path)
            .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
        let mut writer = BufWriter::new(file);
        for system in items {
            writeln!(writer, "{}", system.to_json_line())
                .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
        }
        writer.flush().map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
        report.output = Some(path.display().to_string());
    }
    report.enumeration = Some(EnumerationDetails {
        filter: result.filter,
        tally: result.tally,
        matching: result.tally.count(result.filter),
    });
    report.outcome = Outcome::Count;
    Ok(())
}

fn oracle(report: &mut RunReport, graph_path: &Path, limit: usize) -> Run<()> {
    let graph = load(graph_path, parse_graph)?;
    let cv = cross_validate(&graph, limit).map_err(|e| InputError(e.to_string()))?;
    report.outcome = if cv.passed() { Outcome::Pass } else { Outcome::Fail };
    report.cross_validation = Some(cv);
    Ok(())
}
