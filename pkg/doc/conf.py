# -*- coding: utf-8 -*-
#
# gaussci documentation build configuration file
import sys, os
sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.viewcode', 'sphinx.ext.autodoc', 'sphinx.ext.doctest', 'sphinx.ext.todo', 'sphinx.ext.mathjax']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
project = u'gaussci'
copyright = u'2026, The gaussci developers'
version = '0.1.0'
release = '0.1.0'
exclude_trees = ['_build']
pygments_style = 'sphinx'
html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'gaussci'
latex_documents = [
  ('index', 'gaussci.tex', u'gaussci Documentation',
   u'The gaussci developers', 'manual'),
]
