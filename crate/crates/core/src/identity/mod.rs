//! Multilinear identity DSL: parser, evaluator over basis tuples, and the catalog.

mod ast;
mod catalog;
mod eval;
mod parser;

pub use ast::{render_node, IdentityExpr, Node, Sort, VarDecls};
pub use catalog::{m_dendriform_3_as_printed, CatalogEntry, ModuleClass, StructureClass};
pub use eval::{check_identity, eval_at_basis, eval_identity, CheckOptions};
pub use parser::{parse_identity, parse_identity_file};

impl IdentityExpr {
    pub fn render(&self, params: &[String]) -> String {
        render_node(&self.root, params)
    }
}
