from django.dispatch import Signal

# Envoyé à chaque vérification nommée : subject, verdict (Verdict)
check_completed = Signal()
