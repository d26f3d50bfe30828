"""
EXPLICACIÓN: Archivo principal para ejecutar fraclei desde la línea de comandos.

    python run.py list-systems
    python run.py derive "x1*x2*x3" --axis x1 --alpha 0.5
    python run.py simulate --system maxwell-bloch-frac --alpha 0.8 --T 5
    python run.py verify all
"""

from cli import cli


def main():
    """Función principal: delega en el grupo de comandos click"""
    cli(prog_name='fraclei')


if __name__ == '__main__':
    main()
